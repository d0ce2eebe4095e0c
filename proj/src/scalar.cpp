#include "heckelab/scalar.hpp"

namespace heckelab {

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

int scalar_cmp(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c;
  return cmp(a.im, b.im);
}

std::string to_string(const Scalar& s) {
  if (s.im == 0) return rat_to_string(s.re);
  std::string out = rat_to_string(s.re);
  if (s.im >= 0) out += "+";
  out += rat_to_string(s.im) + "*i";
  return out;
}

Scalar scalar_from_string(const std::string& str) {
  std::string s = str;
  // strip whitespace
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t') t += c;
  s = t;
  if (s.empty()) throw std::invalid_argument("empty scalar literal");

  auto star = s.rfind("*i");
  if (star == std::string::npos) return Scalar(rat_from_string(s));

  std::string imag_part = s.substr(0, star);
  // locate the split between real and imaginary summands: the last
  // top-level '+'/'-' that is not a leading sign and does not follow '/'
  size_t split = std::string::npos;
  for (size_t k = imag_part.size(); k-- > 1;) {
    char c = imag_part[k];
    if ((c == '+' || c == '-') && imag_part[k - 1] != '/' && imag_part[k - 1] != '+' &&
        imag_part[k - 1] != '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    // pure imaginary, e.g. "1/2*i" or "-3*i"
    return Scalar(Rat(0), rat_from_string(imag_part));
  }
  Rat re = rat_from_string(imag_part.substr(0, split));
  std::string im_str = imag_part.substr(split);
  if (im_str == "+") im_str = "1";
  else if (im_str == "-") im_str = "-1";
  else if (im_str[0] == '+') im_str = im_str.substr(1);
  return Scalar(re, rat_from_string(im_str));
}

}  // namespace heckelab
