#include "text_report.hpp"

#include <sstream>
#include <vector>

#include "kouch/error.hpp"

namespace kouch::cli {
namespace {

bool needs_block(const Json& v) {
  if (v.is_object()) return !v.empty();
  if (!v.is_array()) return false;
  for (const Json& e : v)
    if (e.is_object() && !e.empty()) return true;
  return false;
}

void emit(const Json& obj, int indent, std::ostringstream& out);

void emit_value(const std::string& key, const Json& v, int indent,
                std::ostringstream& out) {
  std::string pad(indent, ' ');
  if (!needs_block(v)) {
    out << pad << key << ": " << v.dump() << '\n';
    return;
  }
  out << pad << key << ":\n";
  if (v.is_object()) {
    emit(v, indent + 2, out);
    return;
  }
  for (const Json& e : v) {
    if (e.is_object() && !e.empty()) {
      out << pad << "  -\n";
      emit(e, indent + 4, out);
    } else {
      out << pad << "  - " << e.dump() << '\n';
    }
  }
}

void emit(const Json& obj, int indent, std::ostringstream& out) {
  for (const auto& item : obj.items()) emit_value(item.key(), item.value(), indent, out);
}

struct Line {
  int indent;
  std::string body;
};

class Reader {
 public:
  explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  Json object(int indent) {
    Json out = Json::object();
    while (pos_ < lines_.size() && lines_[pos_].indent == indent &&
           lines_[pos_].body.rfind("-", 0) != 0) {
      const std::string& body = lines_[pos_].body;
      auto colon = body.find(':');
      if (colon == std::string::npos)
        throw InputError("text report: expected 'key: value'");
      std::string key = body.substr(0, colon);
      std::string rest = body.substr(colon + 1);
      ++pos_;
      if (!rest.empty()) {
        out[key] = Json::parse(rest.substr(1));
        continue;
      }
      if (pos_ < lines_.size() && lines_[pos_].indent == indent + 2 &&
          lines_[pos_].body.rfind("-", 0) == 0)
        out[key] = array(indent + 2);
      else
        out[key] = object(indent + 2);
    }
    return out;
  }

  Json array(int indent) {
    Json out = Json::array();
    while (pos_ < lines_.size() && lines_[pos_].indent == indent &&
           lines_[pos_].body.rfind("-", 0) == 0) {
      const std::string& body = lines_[pos_].body;
      ++pos_;
      if (body == "-")
        out.push_back(object(indent + 2));
      else
        out.push_back(Json::parse(body.substr(2)));
    }
    return out;
  }

  bool done() const { return pos_ == lines_.size(); }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_text_report(const Json& report) {
  std::ostringstream out;
  emit(report, 0, out);
  return out.str();
}

Json parse_text_report(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    if (raw.empty()) continue;
    std::size_t n = raw.find_first_not_of(' ');
    lines.push_back({static_cast<int>(n), raw.substr(n)});
  }
  Reader reader(std::move(lines));
  Json out = reader.object(0);
  if (!reader.done()) throw InputError("text report: unexpected indentation");
  return out;
}

}  // namespace kouch::cli
