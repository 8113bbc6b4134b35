#include "orbitlie/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace orbitlie {

ParseError::ParseError(std::string source, std::vector<Diagnostic> diags)
    : std::runtime_error(diags.empty() ? source + ": parse error" : format_diagnostic(source, diags.front())),
      source_(std::move(source)),
      diags_(std::move(diags)) {}

std::string format_diagnostic(const std::string& source, const Diagnostic& d) {
  return source + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message;
}

namespace {

const std::vector<std::string> kSections = {"entry",  "flags",         "algebra", "isotropy",  "complement",
                                            "metric", "cartan",        "levi",    "nr_complement", "blocks",
                                            "subalgebras", "witnesses", "matrix_model", "expected"};

struct Item {
  std::size_t line = 0;
  std::size_t key_col = 0;
  std::size_t val_col = 0;
  std::string key;
  std::string value;
  bool bare = false;
};

struct Section {
  std::string name;
  std::size_t line = 0;
  std::vector<Item> items;
};

struct Token {
  std::string text;
  std::size_t col;
};

std::vector<Token> tokenize(const std::string& s, std::size_t col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({s.substr(start, i - start), col0 + start});
  }
  return out;
}

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) {
    if (lead) *lead = s.size();
    return "";
  }
  const auto b = s.find_last_not_of(" \t\r");
  if (lead) *lead = a;
  return s.substr(a, b - a + 1);
}

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  CatalogEntry run(std::string_view text) {
    split(text);
    CatalogEntry e;
    parse_entry_section(e);
    parse_flags(e);
    const auto g = parse_algebra();
    flush();
    const std::size_t n = g.dim();
    const auto* iso = find("isotropy");
    const Subspace h = iso ? subspace_of(*iso, "row", n) : Subspace::zero(n);
    flush();
    std::optional<Subspace> m;
    const auto* comp = find("complement");
    if (!comp || (comp->items.size() == 1 && comp->items[0].bare && comp->items[0].key == "killing")) {
      try {
        m = killing_complement(g, h);
      } catch (const SpecError& ex) {
        error(comp ? comp->line : (iso ? iso->line : 1), 1, ex.what());
      }
    } else {
      m = subspace_of(*comp, "row", n);
    }
    flush();
    const auto* met = find("metric");
    if (!met) {
      error(1, 1, "missing [metric] section");
      flush();
    }
    const auto ip = matrix_of(*met, m->dim());
    flush();
    bool symmetric = true;
    for (std::size_t i = 0; i < ip.rows(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (ip(i, j) != ip(j, i)) {
          symmetric = false;
          error(met->items[i].line, met->items[i].val_col, "metric is not symmetric: entry (" + std::to_string(i + 1) + "," +
                                                                std::to_string(j + 1) + ") differs from (" +
                                                                std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
        }
    if (symmetric && !is_positive_definite(ip)) error(met->line, 1, "metric is not positive definite");
    flush();
    try {
      e.spec = HomogeneousSpaceSpec(g, h, *m, ip);
    } catch (const SpecError& ex) {
      error(comp ? comp->line : 1, 1, ex.what());
      flush();
    }
    for (const auto& c : validate(e.spec).checks)
      if (!c.pass) {
        const char* sec = c.name.rfind("ip", 0) == 0 ? "metric" : (c.name == "h_subalgebra" || c.name == "killing_negative_definite_on_h") ? "isotropy" : "complement";
        const auto* s = find(sec);
        error(s ? s->line : 1, 1, "validation failed: " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
      }
    flush();

    if (const auto* s = find("cartan")) e.theta = matrix_of(*s, n);
    if (const auto* s = find("levi")) e.levi_candidate = subspace_of(*s, "row", n);
    if (const auto* s = find("nr_complement")) e.nr_complement = subspace_of(*s, "row", n);
    if (const auto* s = find("blocks"))
      for (const auto& it : s->items) e.blocks.push_back(multi_row(it, "block", n));
    if (const auto* s = find("subalgebras"))
      for (const auto& it : s->items) e.invariant_subalgebras.push_back(multi_row(it, "subalgebra", n));
    if (const auto* s = find("witnesses"))
      for (const auto& it : s->items) {
        if (!expect_key(it, "x")) continue;
        e.witnesses.push_back(vector_of(it.value, it.val_col, it.line, n));
      }
    if (const auto* s = find("matrix_model")) e.matrix_model = matrix_model_of(*s, n);
    if (const auto* s = find("expected"))
      for (const auto& it : s->items) {
        if (it.bare) {
          error(it.line, it.key_col, "expected 'key = value'");
          continue;
        }
        e.expected.emplace_back(it.key, it.value);
      }
    flush();
    return e;
  }

 private:
  std::string source_;
  std::vector<Diagnostic> diags_;
  std::vector<Section> sections_;

  void error(std::size_t line, std::size_t col, std::string msg) { diags_.push_back({line, col, std::move(msg)}); }
  void flush() {
    std::stable_sort(diags_.begin(), diags_.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return std::tie(a.line, a.column) < std::tie(b.line, b.column); });
    if (!diags_.empty()) throw ParseError(source_, diags_);
  }

  const Section* find(const std::string& name) const {
    for (const auto& s : sections_)
      if (s.name == name) return &s;
    return nullptr;
  }

  void split(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string raw;
    std::size_t no = 0;
    std::set<std::string> seen;
    while (std::getline(is, raw)) {
      ++no;
      std::size_t lead = 0;
      const auto t = trim(raw, &lead);
      if (t.empty() || t[0] == '#') continue;
      if (t[0] == '[') {
        if (t.back() != ']') {
          error(no, lead + t.size(), "expected ']'");
          continue;
        }
        const auto name = t.substr(1, t.size() - 2);
        if (std::find(kSections.begin(), kSections.end(), name) == kSections.end()) error(no, lead + 2, "unknown section [" + name + "]");
        if (!seen.insert(name).second) error(no, lead + 1, "duplicate section [" + name + "]");
        sections_.push_back({name, no, {}});
        continue;
      }
      if (sections_.empty()) {
        error(no, lead + 1, "expected a section header before this line");
        continue;
      }
      Item it;
      it.line = no;
      it.key_col = lead + 1;
      const auto eq = raw.find('=');
      if (eq == std::string::npos) {
        it.key = t;
        it.bare = true;
      } else {
        it.key = trim(raw.substr(0, eq));
        std::size_t vlead = 0;
        it.value = trim(raw.substr(eq + 1), &vlead);
        it.val_col = eq + 2 + vlead;
        if (it.key.empty()) error(no, lead + 1, "missing key before '='");
      }
      sections_.back().items.push_back(std::move(it));
    }
  }

  bool expect_key(const Item& it, const std::string& key) {
    if (it.bare || it.key != key) {
      error(it.line, it.key_col, "expected '" + key + " = ...'");
      return false;
    }
    return true;
  }

  RatVector vector_of(const std::string& text, std::size_t col0, std::size_t line, std::size_t n) {
    RatVector out;
    const auto toks = tokenize(text, col0);
    for (const auto& t : toks) {
      const auto q = parse_rational(t.text);
      if (!q) {
        error(line, t.col, "malformed rational '" + t.text + "'");
        out.push_back(0);
      } else {
        out.push_back(*q);
      }
    }
    if (out.size() != n) {
      error(line, col0, "expected " + std::to_string(n) + " entries, found " + std::to_string(out.size()));
      out.resize(n);
    }
    return out;
  }

  Subspace independent(std::vector<RatVector> rows, std::size_t n, std::size_t line, std::size_t col) {
    if (Subspace::span(n, rows).dim() != rows.size()) {
      error(line, col, "rows are linearly dependent");
      return Subspace::zero(n);
    }
    return Subspace::from_basis(n, std::move(rows));
  }

  Subspace subspace_of(const Section& s, const std::string& key, std::size_t n) {
    std::vector<RatVector> rows;
    for (const auto& it : s.items) {
      if (!expect_key(it, key)) continue;
      rows.push_back(vector_of(it.value, it.val_col, it.line, n));
    }
    if (!diags_.empty()) return Subspace::zero(n);
    return independent(std::move(rows), n, s.line, 1);
  }

  Subspace multi_row(const Item& it, const std::string& key, std::size_t n) {
    if (!expect_key(it, key)) return Subspace::zero(n);
    std::vector<RatVector> rows;
    std::size_t start = 0;
    while (true) {
      const auto bar = it.value.find('|', start);
      const auto piece = it.value.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
      rows.push_back(vector_of(piece, it.val_col + start, it.line, n));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (!diags_.empty()) return Subspace::zero(n);
    return independent(std::move(rows), n, it.line, it.val_col);
  }

  RatMatrix matrix_of(const Section& s, std::size_t n) {
    std::vector<RatVector> rows;
    for (const auto& it : s.items) {
      if (!expect_key(it, "row")) continue;
      rows.push_back(vector_of(it.value, it.val_col, it.line, n));
    }
    if (rows.size() != n) error(s.line, 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
    if (!diags_.empty()) return RatMatrix(n, n);
    return RatMatrix::from_rows(rows, n);
  }

  void parse_entry_section(CatalogEntry& e) {
    const auto* s = find("entry");
    if (!s) {
      error(1, 1, "missing [entry] section");
      return;
    }
    for (const auto& it : s->items) {
      if (it.bare) {
        error(it.line, it.key_col, "expected 'key = value'");
      } else if (it.key == "name") {
        e.name = it.value;
      } else if (it.key == "samples" || it.key == "seed") {
        try {
          std::size_t used = 0;
          const auto v = std::stoull(it.value, &used);
          if (used != it.value.size() || it.value[0] == '-') throw std::invalid_argument("");
          if (it.key == "samples")
            e.samples = v;
          else
            e.seed = v;
        } catch (const std::exception&) {
          error(it.line, it.val_col, "expected a non-negative integer");
        }
      } else {
        error(it.line, it.key_col, "unknown key '" + it.key + "'");
      }
    }
    if (e.name.empty()) error(s->line, 1, "missing name");
  }

  void parse_flags(CatalogEntry& e) {
    const auto* s = find("flags");
    if (!s) return;
    for (const auto& it : s->items) {
      bool* target = nullptr;
      if (it.key == "claims_go") target = &e.flags.claims_go;
      if (it.key == "nilmanifold") target = &e.flags.nilmanifold;
      if (it.key == "rn_type") target = &e.flags.rn_type;
      if (it.key == "s_not_orthogonal") target = &e.flags.s_not_orthogonal;
      if (!target || it.bare) {
        error(it.line, it.key_col, "unknown flag '" + it.key + "'");
        continue;
      }
      if (it.value == "yes")
        *target = true;
      else if (it.value == "no")
        *target = false;
      else
        error(it.line, it.val_col, "expected yes or no");
    }
  }

  LieAlgebra parse_algebra() {
    const auto* s = find("algebra");
    if (!s) {
      error(1, 1, "missing [algebra] section");
      return {};
    }
    std::vector<std::string> labels;
    const Item* basis = nullptr;
    std::optional<std::size_t> dim;
    for (const auto& it : s->items)
      if (it.key == "basis" && !it.bare) {
        basis = &it;
        std::set<std::string> seen;
        for (const auto& t : tokenize(it.value, it.val_col)) {
          if (!seen.insert(t.text).second) error(it.line, t.col, "duplicate basis label '" + t.text + "'");
          labels.push_back(t.text);
        }
      } else if (it.key == "dim" && !it.bare) {
        try {
          dim = std::stoul(it.value);
        } catch (const std::exception&) {
          error(it.line, it.val_col, "expected a dimension");
        }
      }
    if (!basis) {
      error(s->line, 1, "missing basis");
      return {};
    }
    if (dim && *dim != labels.size())
      error(basis->line, basis->val_col, "dim = " + std::to_string(*dim) + " but " + std::to_string(labels.size()) + " labels");
    const std::size_t n = labels.size();
    std::vector<std::vector<RatVector>> c(n, std::vector<RatVector>(n, zero_vector(n)));
    struct Seen {
      Rational value;
      std::size_t line;
    };
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Seen> given;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> lines;  // (i, j, line) per triple
    static const std::regex re(R"(c\[(\d+)\]\[(\d+)\]\[(\d+)\])");
    for (const auto& it : s->items) {
      if (it.key == "basis" || it.key == "dim") continue;
      std::smatch mt;
      if (it.bare || !std::regex_match(it.key, mt, re)) {
        error(it.line, it.key_col, "expected 'c[i][j][k] = coefficient'");
        continue;
      }
      const std::size_t i = std::stoul(mt[1]), j = std::stoul(mt[2]), k = std::stoul(mt[3]);
      if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n) {
        error(it.line, it.key_col, "index out of range 1.." + std::to_string(n));
        continue;
      }
      const auto q = parse_rational(it.value);
      if (!q) {
        error(it.line, it.val_col, "malformed rational '" + it.value + "'");
        continue;
      }
      const auto key = std::make_tuple(i - 1, j - 1, k - 1);
      const auto mirror = std::make_tuple(j - 1, i - 1, k - 1);
      if (i == j && *q != 0) {
        error(it.line, it.key_col, "antisymmetry violated: [" + labels[i - 1] + ", " + labels[i - 1] + "] must vanish");
        continue;
      }
      if (const auto f = given.find(key); f != given.end() && f->second.value != *q) {
        error(it.line, it.key_col, "conflicts with line " + std::to_string(f->second.line));
        continue;
      }
      if (const auto f = given.find(mirror); f != given.end() && f->second.value != -*q) {
        error(it.line, it.key_col,
              "antisymmetry violated: c[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) + "] = " + to_string(*q) +
                  " but c[" + std::to_string(j) + "][" + std::to_string(i) + "][" + std::to_string(k) + "] = " +
                  to_string(f->second.value) + " on line " + std::to_string(f->second.line));
        continue;
      }
      given[key] = {*q, it.line};
      c[i - 1][j - 1][k - 1] = *q;
      c[j - 1][i - 1][k - 1] = -*q;
      lines.emplace_back(i - 1, j - 1, it.line);
    }
    if (!diags_.empty()) return {};
    try {
      return LieAlgebra(labels, c);
    } catch (const AxiomViolation& ex) {
      const auto& idx = ex.indices();
      std::size_t line = s->line;
      for (const auto& [i, j, l] : lines) {
        bool hit = false;
        for (std::size_t a = 0; a < idx.size(); ++a)
          for (std::size_t b = 0; b < idx.size(); ++b)
            hit = hit || (a != b && i == idx[a] && j == idx[b]);
        if (hit) {
          line = l;
          break;
        }
      }
      std::string names;
      for (auto x : idx) names += (names.empty() ? "" : ", ") + labels.at(x);
      const std::string what = ex.axiom() == AxiomViolation::Axiom::Jacobi ? "Jacobi identity" : axiom_name(ex.axiom());
      error(line, 1, what + " violated for (" + names + ")");
      return {};
    }
  }

  MatrixModelData matrix_model_of(const Section& s, std::size_t n) {
    MatrixModelData md;
    std::size_t size = 0;
    std::vector<const Item*> mats;
    const Item* sub = nullptr;
    for (const auto& it : s.items) {
      if (it.key == "size" && !it.bare) {
        try {
          size = std::stoul(it.value);
        } catch (const std::exception&) {
          error(it.line, it.val_col, "expected a matrix size");
        }
      } else if (it.key == "projection" && !it.bare) {
        if (it.value == "rq")
          md.rq = true;
        else if (it.value != "none")
          error(it.line, it.val_col, "expected rq or none");
      } else if (it.key == "matrix" && !it.bare) {
        mats.push_back(&it);
      } else if (it.key == "s" && !it.bare) {
        sub = &it;
      } else {
        error(it.line, it.key_col, "unknown key '" + it.key + "'");
      }
    }
    if (size == 0) error(s.line, 1, "missing size");
    if (mats.size() != n) error(s.line, 1, "expected one matrix per basis vector (" + std::to_string(n) + ")");
    if (!sub) error(s.line, 1, "missing s");
    if (!diags_.empty()) return md;
    for (const auto* it : mats) {
      const auto entries = vector_of(it->value, it->val_col, it->line, size * size);
      RatMatrix m(size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m(i, j) = entries[i * size + j];
      md.matrices.push_back(m);
    }
    md.s = multi_row(*sub, "s", n);
    return md;
  }
};

std::string row_text(const RatVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
  return out;
}

std::string rows_text(const Subspace& s) {
  std::string out;
  for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? " | " : "") + row_text(s.basis_vector(i));
  return out;
}

void emit_rows(std::ostream& os, const Subspace& s) {
  for (const auto& b : s.basis()) os << "row = " << row_text(b) << "\n";
}

void emit_matrix(std::ostream& os, const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RatVector r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    os << "row = " << row_text(r) << "\n";
  }
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

CatalogEntry parse_entry(std::string_view text, const std::string& source) { return Parser(source).run(text); }

CatalogEntry parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, {{0, 0, "cannot open file"}});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_entry(ss.str(), path);
}

std::string emit(const CatalogEntry& e) {
  std::ostringstream os;
  const auto& g = e.spec.g();
  const std::size_t n = g.dim();
  os << "[entry]\nname = " << e.name << "\nsamples = " << e.samples << "\nseed = " << e.seed << "\n";
  os << "\n[flags]\nclaims_go = " << yn(e.flags.claims_go) << "\nnilmanifold = " << yn(e.flags.nilmanifold)
     << "\nrn_type = " << yn(e.flags.rn_type) << "\ns_not_orthogonal = " << yn(e.flags.s_not_orthogonal) << "\n";
  os << "\n[algebra]\nbasis =";
  for (const auto& l : g.labels()) os << " " << l;
  os << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.structure(i, j)[k] != 0)
          os << "c[" << i + 1 << "][" << j + 1 << "][" << k + 1 << "] = " << to_string(g.structure(i, j)[k]) << "\n";
  os << "\n[isotropy]\n";
  emit_rows(os, e.spec.h());
  os << "\n[complement]\n";
  emit_rows(os, e.spec.m());
  os << "\n[metric]\n";
  emit_matrix(os, e.spec.ip());
  if (e.theta) {
    os << "\n[cartan]\n";
    emit_matrix(os, *e.theta);
  }
  if (e.levi_candidate) {
    os << "\n[levi]\n";
    emit_rows(os, *e.levi_candidate);
  }
  if (e.nr_complement) {
    os << "\n[nr_complement]\n";
    emit_rows(os, *e.nr_complement);
  }
  if (!e.blocks.empty()) {
    os << "\n[blocks]\n";
    for (const auto& b : e.blocks) os << "block = " << rows_text(b) << "\n";
  }
  if (!e.invariant_subalgebras.empty()) {
    os << "\n[subalgebras]\n";
    for (const auto& b : e.invariant_subalgebras) os << "subalgebra = " << rows_text(b) << "\n";
  }
  if (!e.witnesses.empty()) {
    os << "\n[witnesses]\n";
    for (const auto& w : e.witnesses) os << "x = " << row_text(w) << "\n";
  }
  if (e.matrix_model) {
    const auto& md = *e.matrix_model;
    const std::size_t size = md.matrices.empty() ? 0 : md.matrices[0].rows();
    os << "\n[matrix_model]\nsize = " << size << "\nprojection = " << (md.rq ? "rq" : "none") << "\n";
    for (const auto& m : md.matrices) {
      RatVector flat;
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) flat.push_back(m(i, j));
      os << "matrix = " << row_text(flat) << "\n";
    }
    os << "s = " << rows_text(md.s) << "\n";
  }
  if (!e.expected.empty()) {
    os << "\n[expected]\n";
    for (const auto& [k, v] : e.expected) os << k << " = " << v << "\n";
  }
  return os.str();
}

}  // namespace orbitlie
