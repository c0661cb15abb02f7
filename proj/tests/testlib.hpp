#pragma once

// Minimal check harness shared by the test executables: each test is a plain
// main() that runs checks and returns the failure count.

#include <concepts>
#include <iostream>
#include <sstream>
#include <string>

inline int g_failures = 0;

inline void check(bool ok, const std::string& what) {
    if (!ok) {
        std::cout << "FAIL " << what << "\n";
        ++g_failures;
    }
}

// Renders a value for failure messages: an ADL-visible to_string if the type
// has one, else operator<<, else a placeholder.
template <class T>
std::string describe(const T& v) {
    if constexpr (requires { { to_string(v) } -> std::convertible_to<std::string>; }) {
        return to_string(v);
    } else if constexpr (requires(std::ostream& os) { os << v; }) {
        std::ostringstream os;
        os << v;
        return os.str();
    } else {
        return "<unprintable>";
    }
}

template <class A, class B>
void check_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
        check(false, what + ": got " + describe(got) + ", want " + describe(want));
    }
}

template <class Fn>
void check_throws(Fn&& fn, const std::string& what) {
    bool threw = false;
    try {
        fn();
    } catch (const std::exception&) {
        threw = true;
    }
    check(threw, what + ": expected an exception");
}

inline int finish(const char* name) {
    if (g_failures == 0) {
        std::cout << name << ": ok\n";
        return 0;
    }
    std::cout << name << ": " << g_failures << " failure(s)\n";
    return 1;
}
