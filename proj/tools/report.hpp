#ifndef NILFOCK_TOOLS_REPORT_HPP
#define NILFOCK_TOOLS_REPORT_HPP

#include <Eigen/Dense>

#include <cstdio>
#include <string>
#include <vector>

namespace nilfock::cli
{

/// Plain `key: value` report, assembled in memory and written once.
class Report
{
public:
  void add(const std::string& key, const std::string& value) { m_text += key + ": " + value + "\n"; }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, bool value) { add(key, value ? "true" : "false"); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }
  void add(const std::string& key, long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, unsigned long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, unsigned long long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, double value) { add(key, number(value)); }
  void raw(const std::string& text) { m_text += text; }

  const std::string& text() const { return m_text; }

  /// Measured quantities: six significant digits in scientific form.
  static std::string number(double v)
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
  }

  /// Coordinates and parameters: shortest form with up to 12 significant digits.
  static std::string coordinate(double v)
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
  }

  static std::string vector(const Eigen::VectorXd& v)
  {
    std::string out = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i)
      out += (i ? ", " : "") + coordinate(v(i));
    return out + "]";
  }

  template <typename T>
  static std::string list(const std::vector<T>& items)
  {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i)
      out += (i ? ", " : "") + std::to_string(items[i]);
    return out + "]";
  }

private:
  std::string m_text;
};

} // namespace nilfock::cli

#endif // NILFOCK_TOOLS_REPORT_HPP
