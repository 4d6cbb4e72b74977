#include "gchar/q8ring/q8ring.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <random>
#include <set>

#include "gchar/parse.hpp"

namespace gchar {

GaussianRational parse_gaussian(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail(ErrorKind::Parse, "empty Gaussian rational");
  try {
    if (s.back() != 'i') return GaussianRational(parse_rational(s));
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size() - 1; k > 0; --k)
      if (s[k] == '+' || s[k] == '-') {
        split = k;
        break;
      }
    std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    im.pop_back();
    if (!im.empty() && im.back() == '*') im.pop_back();
    if (im.empty() || im == "+") im = "1";
    else if (im == "-") im = "-1";
    if (im[0] == '+') im.erase(0, 1);
    return GaussianRational(re.empty() ? Rational(0) : parse_rational(re), parse_rational(im));
  } catch (const Error&) {
    fail(ErrorKind::Parse, "bad Gaussian rational '" + text + "'");
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Parse, "bad Gaussian rational '" + text + "'");
  }
}

ProjPoint::ProjPoint(const GaussianRational& lambda, const GaussianRational& mu) {
  if (!lambda.is_zero()) {
    l_ = GaussianRational(1);
    m_ = mu / lambda;
  } else if (!mu.is_zero()) {
    l_ = GaussianRational(0);
    m_ = GaussianRational(1);
  } else {
    fail(ErrorKind::InvalidArgument, "[0:0] is not a point");
  }
}

ProjPoint ProjPoint::parse(const std::string& text) {
  const auto parts = split_top_level(strip_enclosing(text, '[', ']'), ':');
  if (parts.size() != 2) fail(ErrorKind::Parse, "expected [l:m], got '" + text + "'");
  const GaussianRational l = parse_gaussian(parts[0]), m = parse_gaussian(parts[1]);
  if (l.is_zero() && m.is_zero()) fail(ErrorKind::Parse, "[0:0] is not a point");
  return ProjPoint(l, m);
}

std::string ProjPoint::to_string() const { return "[" + l_.to_string() + ":" + m_.to_string() + "]"; }

bool ProjPoint::operator<(const ProjPoint& o) const {
  if (l_ != o.l_) return l_ < o.l_;
  return m_ < o.m_;
}

const std::vector<ProjPoint>& special_points() {
  static const std::vector<ProjPoint> pts = {
      ProjPoint(1, 1), ProjPoint(1, -1), ProjPoint(1, 0),
      ProjPoint(0, 1), ProjPoint(1, GaussianRational::i()), ProjPoint(1, -GaussianRational::i())};
  return pts;
}

bool is_special(const ProjPoint& p) {
  for (const auto& s : special_points())
    if (s == p) return true;
  return false;
}

std::string v4_element_name(unsigned g) {
  static const char* names[] = {"1", "a", "b", "c"};
  return names[g & 3];
}

std::string v4_set_string(V4Set s) {
  std::string out = "{";
  bool first = true;
  for (unsigned g = 0; g < 4; ++g)
    if (s >> g & 1) {
      if (!first) out += ",";
      out += v4_element_name(g);
      first = false;
    }
  return out + "}";
}

V4Set parse_v4_set(const std::string& text) {
  const std::string inner = trim(strip_enclosing(text, '{', '}'));
  V4Set s = 0;
  if (inner.empty()) return s;
  for (const auto& part : split_top_level(inner, ',')) {
    const std::string t = trim(part);
    unsigned g = 4;
    for (unsigned k = 0; k < 4; ++k)
      if (t == v4_element_name(k)) g = k;
    if (g == 4) fail(ErrorKind::Parse, "unknown V4 element '" + t + "'");
    s |= static_cast<V4Set>(1u << g);
  }
  return s;
}

V4Set v4_product(V4Set a, V4Set b) {
  V4Set out = 0;
  for (unsigned g = 0; g < 4; ++g)
    if (a >> g & 1)
      for (unsigned h = 0; h < 4; ++h)
        if (b >> h & 1) out |= static_cast<V4Set>(1u << (g ^ h));
  return out;
}

std::vector<ProjPoint> UPart::representatives() const {
  switch (kind) {
    case Kind::None: return {};
    case Kind::Point: return {point};
    case Kind::Star: return {ProjPoint(1, 0), ProjPoint(0, 1)};
  }
  return {};
}

std::string UPart::to_string() const {
  switch (kind) {
    case Kind::None: return "{}";
    case Kind::Point: return point.to_string();
    case Kind::Star: return "*";
  }
  return "";
}

bool UPart::operator<(const UPart& o) const {
  if (kind != o.kind) return kind < o.kind;
  return kind == Kind::Point && point < o.point;
}

Q8Label Q8Label::parse(const std::string& text) {
  const auto parts = split_top_level(strip_enclosing(text, '(', ')'), ',');
  if (parts.size() != 2) fail(ErrorKind::Parse, "expected (set,U), got '" + text + "'");
  Q8Label l;
  l.set = parse_v4_set(parts[0]);
  const std::string u = trim(parts[1]);
  if (u == "{}") l.u = UPart::none();
  else if (u == "*") l.u = UPart::star();
  else l.u = UPart::at(ProjPoint::parse(u));
  return l;
}

std::string Q8Label::to_string() const { return "(" + v4_set_string(set) + "," + u.to_string() + ")"; }

bool Q8Label::operator<(const Q8Label& o) const {
  if (set != o.set) return set < o.set;
  return u < o.u;
}

ProjPoint point_action(unsigned g, const ProjPoint& p) {
  const auto& l = p.lambda();
  const auto& m = p.mu();
  switch (g & 3) {
    case 0: return p;
    case 1: return ProjPoint(m, l);
    case 2: return ProjPoint(-l, m);
    default: return ProjPoint(-m, l);
  }
}

V4Set uu_product(const ProjPoint& p, const ProjPoint& q) {
  const auto& l1 = p.lambda();
  const auto& m1 = p.mu();
  const auto& l2 = q.lambda();
  const auto& m2 = q.mu();
  // the factor 1/2 does not affect vanishing
  const GaussianRational a = l1 * m2 - m1 * l2;
  const GaussianRational b = l1 * m2 + m1 * l2;
  const GaussianRational c = l1 * l2 + m1 * m2;
  const GaussianRational d = l1 * l2 - m1 * m2;
  V4Set s = 0;
  if (!a.is_zero()) s |= 1;
  if (!d.is_zero()) s |= 2;
  if (!b.is_zero()) s |= 4;
  if (!c.is_zero()) s |= 8;
  return s;
}

Q8Label label_mul(const Q8Label& x, const Q8Label& y) {
  Q8Label out;
  out.set = v4_product(x.set, y.set);
  const auto rx = x.u.representatives();
  const auto ry = y.u.representatives();
  for (const auto& p : rx)
    for (const auto& q : ry) out.set |= uu_product(p, q);
  std::set<ProjPoint> pts;
  for (unsigned g = 0; g < 4; ++g) {
    if (x.set >> g & 1)
      for (const auto& q : ry) pts.insert(point_action(g, q));
    if (y.set >> g & 1)
      for (const auto& p : rx) pts.insert(point_action(g, p));
  }
  if (pts.size() == 1) out.u = UPart::at(*pts.begin());
  else if (pts.size() > 1) out.u = UPart::star();
  return out;
}

namespace {

const Q8Label kTheta{kV4Full, UPart::star()};

}  // namespace

unsigned minimal_absorbing_exponent(const Q8Label& x) {
  if (x.set == 0) fail(ErrorKind::InvalidArgument, "absorbing exponent needs a nonempty set part");
  std::set<Q8Label> seen;
  Q8Label p = x;
  unsigned n = 1;
  while (p != kTheta) {
    if (!seen.insert(p).second)
      fail(ErrorKind::NotAbsorbing, "powers of " + x.to_string() + " cycle without reaching (V4,*)");
    p = label_mul(p, x);
    ++n;
  }
  return n;
}

Q8RingElement Q8RingElement::basis(const Q8Label& l, const Rational& c) {
  Q8RingElement r;
  r.add_term(l, c);
  return r;
}

Q8RingElement Q8RingElement::parse(const std::string& text) {
  Q8RingElement r;
  for (const auto& [coef, label] : split_linear_combination(text))
    r.add_term(Q8Label::parse(label), parse_rational(coef[0] == '+' ? coef.substr(1) : coef));
  return r;
}

Rational Q8RingElement::coefficient(const Q8Label& l) const {
  const auto it = terms_.find(l);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Q8RingElement::add_term(const Q8Label& l, const Rational& c) {
  if (l.is_zero() || sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(l, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Q8RingElement Q8RingElement::operator+(const Q8RingElement& o) const {
  Q8RingElement r = *this;
  for (const auto& [l, c] : o.terms_) r.add_term(l, c);
  return r;
}

Q8RingElement Q8RingElement::operator-(const Q8RingElement& o) const { return *this + o * Rational(-1); }

Q8RingElement Q8RingElement::operator*(const Q8RingElement& o) const {
  Q8RingElement r;
  for (const auto& [l1, c1] : terms_)
    for (const auto& [l2, c2] : o.terms_) r.add_term(label_mul(l1, l2), c1 * c2);
  return r;
}

Q8RingElement Q8RingElement::operator*(const Rational& c) const {
  Q8RingElement r;
  for (const auto& [l, v] : terms_) r.add_term(l, v * c);
  return r;
}

std::string Q8RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [l, c] : terms_) {
    Rational a = abs(c);
    if (out.empty()) out = sgn(c) < 0 ? "-" : "";
    else out += sgn(c) < 0 ? " - " : " + ";
    if (a != 1) out += a.get_str() + "*";
    out += l.to_string();
  }
  return out;
}

std::vector<Q8Label> special_labels() {
  std::vector<UPart> us = {UPart::none(), UPart::star()};
  for (const auto& p : special_points()) us.push_back(UPart::at(p));
  std::vector<Q8Label> out;
  for (unsigned s = 0; s < 16; ++s)
    for (const auto& u : us) {
      Q8Label l{static_cast<V4Set>(s), u};
      if (!l.is_zero()) out.push_back(l);
    }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteAlgebra special_algebra(const std::vector<Q8Label>& labels) {
  std::map<Q8Label, std::size_t> index;
  for (std::size_t k = 0; k < labels.size(); ++k) index.emplace(labels[k], k);
  return FiniteAlgebra(labels.size(), [&](std::size_t i, std::size_t j) {
    const Q8Label p = label_mul(labels[i], labels[j]);
    SparseVector v;
    if (p.is_zero()) return v;
    const auto it = index.find(p);
    if (it == index.end())
      fail(ErrorKind::InvalidArgument, "label set not closed: " + labels[i].to_string() + " * " +
                                           labels[j].to_string() + " = " + p.to_string());
    v[it->second] = 1;
    return v;
  });
}

std::vector<ProjPoint> generic_points(unsigned seed, std::size_t count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  std::vector<ProjPoint> out;
  while (out.size() < count) {
    const GaussianRational mu(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    if (mu.is_zero()) continue;
    const ProjPoint p(1, mu);
    if (is_special(p)) continue;
    out.push_back(p);
  }
  return out;
}

namespace {

Q8RingElement chi(const std::string& label) { return Q8RingElement::basis(Q8Label::parse(label)); }

Q8Label lab(V4Set s, const UPart& u) { return {s, u}; }

}  // namespace

Report verify_q8_structure(unsigned seed) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.inputs["seed"] = seed;
  const Q8Label empty_star = lab(0, UPart::star());
  const Q8Label v4_none = lab(kV4Full, UPart::none());
  const auto generic = generic_points(seed, 10);

  // singleton action table
  {
    std::vector<ProjPoint> pts = special_points();
    pts.insert(pts.end(), generic.begin(), generic.end());
    std::size_t bad = 0;
    for (unsigned g = 0; g < 4; ++g)
      for (const auto& p : pts) {
        const auto& l = p.lambda();
        const auto& m = p.mu();
        const ProjPoint want = g == 0 ? ProjPoint(l, m) : g == 1 ? ProjPoint(m, l) : g == 2 ? ProjPoint(-l, m)
                                                                                            : ProjPoint(-m, l);
        if (label_mul(lab(1u << g, UPart::none()), lab(0, UPart::at(p))) != lab(0, UPart::at(want))) ++bad;
      }
    r.add("action_table", bad == 0, 0, bad, "mismatches over 4 singletons x 16 points");
  }

  // six-row non-generic table, and the generic value for every other point
  {
    struct Row {
      const char* set;
      const char* p;
      const char* q;
      const char* p_image;
      const char* q_image;
    };
    const Row rows[] = {{"{1,a}", "[1:1]", "[1:-1]", "[1:1]", "[1:-1]"},
                        {"{b,c}", "[1:1]", "[1:-1]", "[-1:1]", "[1:1]"},
                        {"{1,b}", "[0:1]", "[1:0]", "[0:1]", "[1:0]"},
                        {"{a,c}", "[0:1]", "[1:0]", "[1:0]", "[0:1]"},
                        {"{1,c}", "[1:i]", "[1:-i]", "[1:i]", "[1:-i]"},
                        {"{a,b}", "[1:i]", "[1:-i]", "[1:-i]", "[1:i]"}};
    json bad = json::array();
    for (const auto& row : rows) {
      const V4Set a = parse_v4_set(row.set);
      const ProjPoint p = ProjPoint::parse(row.p), q = ProjPoint::parse(row.q);
      std::vector<ProjPoint> pts = special_points();
      pts.insert(pts.end(), generic.begin(), generic.end());
      for (const auto& x : pts) {
        Q8Label want = empty_star;
        if (x == p) want = lab(0, UPart::at(ProjPoint::parse(row.p_image)));
        if (x == q) want = lab(0, UPart::at(ProjPoint::parse(row.q_image)));
        const Q8Label got = label_mul(lab(a, UPart::none()), lab(0, UPart::at(x)));
        if (got != want) bad.push_back(std::string(row.set) + " " + x.to_string() + " -> " + got.to_string());
      }
    }
    r.add("non_generic_table", bad.empty(), json::array(), bad);
  }

  // |A| >= 3 always gives (empty, *); every nonempty A fixes (empty, *)
  {
    json bad = json::array();
    std::vector<ProjPoint> pts = special_points();
    pts.insert(pts.end(), generic.begin(), generic.end());
    for (unsigned s = 1; s < 16; ++s) {
      const Q8Label a = lab(static_cast<V4Set>(s), UPart::none());
      if (label_mul(a, empty_star) != empty_star) bad.push_back(a.to_string() + " * ({},*)");
      if (__builtin_popcount(s) >= 3)
        for (const auto& p : pts)
          if (label_mul(a, lab(0, UPart::at(p))) != empty_star) bad.push_back(a.to_string() + " * " + p.to_string());
    }
    r.add("set_times_star_and_large_sets", bad.empty(), json::array(), bad);
  }

  // starred and U x U products
  {
    json bad = json::array();
    std::vector<ProjPoint> pts = special_points();
    pts.insert(pts.end(), generic.begin(), generic.end());
    for (const auto& p : pts)
      if (label_mul(empty_star, lab(0, UPart::at(p))) != v4_none) bad.push_back("({},*) * " + p.to_string());
    if (label_mul(empty_star, empty_star) != v4_none) bad.push_back("({},*)^2");
    for (const auto& p : generic)
      if (label_mul(lab(0, UPart::at(p)), lab(0, UPart::at(p))) != lab(parse_v4_set("{a,b,c}"), UPart::none()))
        bad.push_back(p.to_string() + "^2");
    if (label_mul(Q8Label::parse("({},[1:2])"), Q8Label::parse("({},[1:3])")) != v4_none)
      bad.push_back("[1:2] x [1:3]");
    if (uu_product(ProjPoint(1, 1), ProjPoint(1, 1)) != parse_v4_set("{b,c}")) bad.push_back("[1:1] x [1:1]");
    if (uu_product(ProjPoint(1, GaussianRational::i()), ProjPoint(1, GaussianRational::i())) != parse_v4_set("{a,b}"))
      bad.push_back("[1:i] x [1:i]");
    for (unsigned s = 1; s < 16; ++s)
      if (label_mul(lab(static_cast<V4Set>(s), UPart::star()), lab(static_cast<V4Set>(s), UPart::star())) != kTheta)
        bad.push_back(v4_set_string(static_cast<V4Set>(s)) + " star squared");
    r.add("starred_products", bad.empty(), json::array(), bad);
    const Q8Label ex = label_mul(Q8Label::parse("({a},[1:i])"), Q8Label::parse("({b},[1:i])"));
    r.add("example_product", ex.to_string() == "({a,b,c},[1:-i])", "({a,b,c},[1:-i])", ex.to_string());
  }

  // the fixture the model does not reproduce
  {
    json d = json::array();
    for (const auto& p : generic) {
      const Q8Label got = label_mul(Q8Label::parse("({a,b},*)"), lab(0, UPart::at(p)));
      if (got != v4_none)
        d.push_back({{"fixture", "({a,b},*) * ({}," + p.to_string() + ")"}, {"stated", v4_none.to_string()},
                     {"model", got.to_string()}});
    }
    r.result["discrepancies"] = d;
    r.note("discrepancy_ab_star_times_point",
           "stated product ({a,b},*)(0,p) = (V4,{}); the component model gives " +
               (d.empty() ? std::string("the same") : d[0]["model"].get<std::string>()) +
               " since a.p and b.p differ projectively; excluded from the checks");
  }

  // item (ii): powers of (empty,[1:1])
  {
    const Q8Label x = Q8Label::parse("({},[1:1])");
    const std::vector<std::string> want = {"({},[1:1])", "({b,c},{})", "({},[1:-1])", "({1,a},{})", "({},[1:1])"};
    std::vector<std::string> got;
    Q8Label p = x;
    for (int n = 1; n <= 5; ++n) {
      got.push_back(p.to_string());
      p = label_mul(p, x);
    }
    r.add("exponent_table", got == want, want, got);
    const Q8Label bc = Q8Label::parse("({b,c},[1:1])");
    r.add("bc_square", label_mul(bc, bc).to_string() == "({1,a,b,c},[1:-1])", "({1,a,b,c},[1:-1])",
          label_mul(bc, bc).to_string());
    r.add("bc_exponent", minimal_absorbing_exponent(bc) == 3, 3, minimal_absorbing_exponent(bc));
  }

  // item (i): nilpotents at generic points
  {
    json bad = json::array();
    const auto s = chi("({},*)");
    for (const auto& p : generic) {
      const auto x = Q8RingElement::basis(lab(0, UPart::at(p))) - s;
      const auto cube = x * x * x;
      if (!cube.is_zero()) bad.push_back(p.to_string() + ": " + cube.to_string());
    }
    r.add("generic_nilpotent_cubes", bad.empty(), json::array(), bad);
    r.result["generic_points"] = json::array();
    for (const auto& p : generic) r.result["generic_points"].push_back(p.to_string());
  }

  const auto labels = special_labels();

  // absorbing element and exponents
  {
    json bad = json::array();
    std::vector<Q8Label> all = labels;
    for (const auto& p : generic)
      for (unsigned s = 0; s < 16; ++s) all.push_back(lab(static_cast<V4Set>(s), UPart::at(p)));
    std::map<unsigned, std::size_t> hist;
    for (const auto& x : all) {
      if (label_mul(x, kTheta) != kTheta || label_mul(kTheta, x) != kTheta) bad.push_back(x.to_string() + " * theta");
      if (x.set == 0 || x.u.kind == UPart::Kind::None) continue;
      try {
        ++hist[minimal_absorbing_exponent(x)];
      } catch (const Error& e) {
        bad.push_back(e.what());
      }
    }
    for (const auto& p : generic)
      if (minimal_absorbing_exponent(lab(kV4Full, UPart::at(p))) != 2) bad.push_back("(V4," + p.to_string() + ")");
    r.add("absorbing_exponents", bad.empty(), json::array(), bad);
    json h = json::object();
    for (auto [n, k] : hist) h[std::to_string(n)] = k;
    r.result["exponent_histogram"] = h;
  }

  // item (v): squares of (empty, p) have no U-part
  {
    json bad = json::array();
    std::vector<ProjPoint> pts = special_points();
    pts.insert(pts.end(), generic.begin(), generic.end());
    for (const auto& p : pts) {
      const Q8Label sq = label_mul(lab(0, UPart::at(p)), lab(0, UPart::at(p)));
      if (sq.u.kind != UPart::Kind::None) bad.push_back(p.to_string() + " -> " + sq.to_string());
    }
    r.add("point_squares_in_v4_image", bad.empty(), json::array(), bad);
  }

  // item (iii): the seven idempotents
  {
    const auto one = chi("({1},{})");
    const auto v = chi("({1,a,b,c},{})");
    const auto s = chi("({},*)");
    const Rational half = make_rational(1, 2);
    std::vector<std::pair<std::string, Q8RingElement>> es = {
        {"(1-X1a)(1-X1b)(1-X1c)", (one - chi("({1,a},{})")) * (one - chi("({1,b},{})")) * (one - chi("({1,c},{})"))},
        {"V/2+S/2", v * half + s * half},
        {"V/2-S/2", v * half - s * half},
        {"X1a-V", chi("({1,a},{})") - v},
        {"X1b-V", chi("({1,b},{})") - v},
        {"X1c-V", chi("({1,c},{})") - v},
        {"theta", chi("({1,a,b,c},*)")}};
    json notidem = json::array(), nonorth = json::array();
    for (const auto& [name, e] : es)
      if (e * e != e) notidem.push_back(name);
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        const auto p = es[i].second * es[j].second;
        if (!p.is_zero()) nonorth.push_back(es[i].first + " * " + es[j].first + " = " + p.to_string());
      }
    r.add("seven_idempotents_idempotent", notidem.empty(), json::array(), notidem);
    r.add("seven_idempotents_orthogonal", nonorth.empty(), json::array(), nonorth,
          nonorth.empty() ? "" : "theta absorbs every label, so e*theta = (sum of coefficients of e)*theta");
  }

  // item (iv) and invariants on the special-point subalgebra
  {
    std::map<Q8Label, std::size_t> index;
    for (std::size_t k = 0; k < labels.size(); ++k) index.emplace(labels[k], k);
    const std::size_t n = labels.size();
    std::vector<int> table(n * n, -1);
    std::size_t open = 0, noncomm = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Q8Label p = label_mul(labels[i], labels[j]);
        if (p.is_zero()) continue;
        const auto it = index.find(p);
        if (it == index.end()) ++open;
        else table[i * n + j] = static_cast<int>(it->second);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (table[i * n + j] != table[j * n + i]) ++noncomm;
    r.add("special_subalgebra_closed", open == 0, 0, open);
    r.add("commutative", noncomm == 0, 0, noncomm);
    auto mul = [&](int i, int j) { return i < 0 || j < 0 ? -1 : table[static_cast<std::size_t>(i) * n + j]; };
    std::size_t nonassoc = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (mul(mul(int(i), int(j)), int(k)) != mul(int(i), mul(int(j), int(k)))) ++nonassoc;
    r.add("associative_on_special_subalgebra", nonassoc == 0, 0, nonassoc);

    std::mt19937 rng(seed + 1);
    std::uniform_int_distribution<unsigned> pick_set(0, 15), pick_u(0, 11);
    std::vector<UPart> us = {UPart::none(), UPart::star()};
    for (const auto& p : generic) us.push_back(UPart::at(p));
    std::size_t gen_bad = 0;
    for (int t = 0; t < 3000; ++t) {
      Q8Label x[3];
      for (auto& l : x) l = lab(static_cast<V4Set>(pick_set(rng)), us[pick_u(rng)]);
      if (label_mul(label_mul(x[0], x[1]), x[2]) != label_mul(x[0], label_mul(x[1], x[2]))) ++gen_bad;
      if (label_mul(x[0], x[1]) != label_mul(x[1], x[0])) ++gen_bad;
    }
    r.add("associative_commutative_generic_sample", gen_bad == 0, 0, gen_bad, "3000 seeded triples");

    const FiniteAlgebra alg = special_algebra(labels);
    const RadicalResult rad = algebra_radical(alg, false);
    const std::size_t q = alg.dim() - rad.dim();
    r.result["special_subalgebra"] = {{"dim", alg.dim()},
                                      {"radical_dim", rad.dim()},
                                      {"quotient_dim", q},
                                      {"quotient_target", 19},
                                      {"radical_power_dims", rad.power_dims}};
    r.add("special_subalgebra_radical_ideal", rad.is_two_sided_ideal && rad.nilpotency_index.has_value(), true,
          rad.is_two_sided_ideal && rad.nilpotency_index.has_value());
    r.note("special_subalgebra_quotient_vs_target",
           {{"quotient_dim", q}, {"target", 19}, {"matches", q == 19}});
  }

  r.result["labels"] = labels.size();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace gchar
