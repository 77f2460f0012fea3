#pragma once

#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace dblgpd {

template <class T>
concept Streamable = requires(std::ostream& os, const T& t) { os << t; };

template <class T>
std::string describe(const T& value);

namespace detail {

template <class T>
struct Describer {
  static std::string run(const T& value) {
    if constexpr (Streamable<T>) {
      std::ostringstream os;
      os << value;
      return os.str();
    } else {
      return "<?>";
    }
  }
};

template <class A, class B>
struct Describer<std::pair<A, B>> {
  static std::string run(const std::pair<A, B>& p) {
    return "(" + describe(p.first) + ", " + describe(p.second) + ")";
  }
};

template <class T>
struct Describer<std::vector<T>> {
  static std::string run(const std::vector<T>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += describe(v[i]);
    }
    return out + "]";
  }
};

}  // namespace detail

/// Human-readable rendering used in audit witnesses.
template <class T>
std::string describe(const T& value) {
  return detail::Describer<T>::run(value);
}

}  // namespace dblgpd
