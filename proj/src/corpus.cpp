#include "mcalg/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mcalg {

namespace {

struct GenDecl {
  std::string cls;
  AttrMap attrs;
  bool complete = false;
};

Model expand(const std::vector<GenDecl>& decls) {
  std::vector<Constraint> out;
  for (const auto& d : decls) {
    out.push_back(ClassExists{d.cls});
    for (const auto& [a, t] : d.attrs) out.push_back(AttrTyped{d.cls, a, t});
    if (d.complete) out.push_back(AttrComplete{d.cls, d.attrs});
  }
  return Model(std::move(out));
}

// Shape of one class inside a generated model: absent (nullopt) or a decl
// body. Shape 0 is absent; the rest follow attribute assignments in
// mixed-radix order (first attribute least significant), open before
// complete.
struct ClassShape {
  AttrMap attrs;
  bool complete = false;
};

std::vector<std::optional<ClassShape>> class_shapes(const CorpusBounds& b) {
  std::vector<std::optional<ClassShape>> shapes{std::nullopt};
  const std::size_t base = b.type_pool.size() + 1;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < b.attr_pool.size(); ++i) combos *= base;
  for (std::size_t r = 0; r < combos; ++r) {
    AttrMap attrs;
    std::size_t x = r;
    for (const auto& attr : b.attr_pool) {
      std::size_t digit = x % base;
      x /= base;
      if (digit != 0) attrs.emplace_back(attr, b.type_pool[digit - 1]);
    }
    if (attrs.size() > b.max_attrs_per_class) continue;
    shapes.push_back(ClassShape{attrs, false});
    if (b.include_complete) shapes.push_back(ClassShape{attrs, true});
  }
  return shapes;
}

class Space {
 public:
  explicit Space(const CorpusBounds& b) : bounds_(b), shapes_(class_shapes(b)) {
    raw_size_ = 1;
    for (std::size_t i = 0; i < b.class_pool.size(); ++i) {
      if (raw_size_ > UINT64_MAX / shapes_.size()) {
        throw std::runtime_error("corpus: model space too large to index");
      }
      raw_size_ *= shapes_.size();
    }
  }

  std::uint64_t raw_size() const { return raw_size_; }
  std::size_t shape_count() const { return shapes_.size(); }

  // Decls of raw index `i`, or nullopt when it exceeds max_classes.
  std::optional<std::vector<GenDecl>> decode(std::uint64_t i) const {
    std::vector<GenDecl> decls;
    for (const auto& cls : bounds_.class_pool) {
      const auto& shape = shapes_[i % shapes_.size()];
      i /= shapes_.size();
      if (shape) decls.push_back(GenDecl{cls, shape->attrs, shape->complete});
    }
    if (decls.size() > bounds_.max_classes) return std::nullopt;
    return decls;
  }

  std::uint64_t encode_single(std::size_t cls, std::size_t shape) const {
    std::uint64_t i = shape;
    for (std::size_t c = 0; c < cls; ++c) i *= shapes_.size();
    return i;
  }

  const std::vector<std::optional<ClassShape>>& shapes() const { return shapes_; }

 private:
  const CorpusBounds& bounds_;
  std::vector<std::optional<ClassShape>> shapes_;
  std::uint64_t raw_size_ = 1;
};

std::string join(const std::vector<std::string>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + "]";
}

}  // namespace

CorpusBounds default_bounds() {
  CorpusBounds b;
  b.class_pool = {"Person", "Account"};
  b.attr_pool = {"name", "age"};
  b.type_pool = {"String", "Int"};
  b.max_classes = 2;
  b.max_attrs_per_class = 2;
  b.include_complete = true;
  b.inject_variants = true;
  return b;
}

std::uint64_t space_size(const CorpusBounds& bounds) {
  // Models with at most max_classes present classes:
  // sum_j C(n, j) * (shapes - 1)^j.
  Space space(bounds);
  const std::uint64_t n = bounds.class_pool.size();
  const std::uint64_t k = space.shape_count() - 1;
  std::uint64_t total = 0, binom = 1, power = 1;
  for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(n, bounds.max_classes); ++j) {
    total += binom * power;
    binom = binom * (n - j) / (j + 1);
    power *= k;
  }
  return total;
}

Corpus generate_corpus(const CorpusBounds& bounds, std::uint64_t seed) {
  if (bounds.class_pool.empty() || bounds.attr_pool.empty() || bounds.type_pool.empty()) {
    throw std::invalid_argument("corpus: name pools must be non-empty");
  }
  Space space(bounds);
  Corpus corpus;
  corpus.origin = Corpus::Origin::generated;
  corpus.space_size = space_size(bounds);

  std::vector<std::vector<GenDecl>> base;
  std::vector<std::string> labels;
  auto add = [&](std::uint64_t index) {
    if (auto decls = space.decode(index)) {
      base.push_back(std::move(*decls));
      labels.push_back("gen:" + std::to_string(index));
    }
  };

  if (corpus.space_size <= bounds.exhaustive_limit) {
    for (std::uint64_t i = 0; i < space.raw_size(); ++i) add(i);
  } else {
    corpus.sampled = true;
    std::set<std::uint64_t> taken{0};
    add(0);
    for (std::size_t c = 0; c < bounds.class_pool.size(); ++c) {
      for (std::size_t s = 1; s < space.shape_count(); ++s) {
        const auto& shape = *space.shapes()[s];
        if (shape.complete || shape.attrs.size() > 1) continue;
        std::uint64_t idx = space.encode_single(c, s);
        taken.insert(idx);
        add(idx);
      }
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> drawn;
    const std::uint64_t available = corpus.space_size - taken.size();
    const std::size_t want = static_cast<std::size_t>(
        std::min<std::uint64_t>(bounds.sample_size, available));
    while (drawn.size() < want) {
      std::uint64_t idx = rng() % space.raw_size();
      if (taken.count(idx) || !space.decode(idx)) continue;
      taken.insert(idx);
      drawn.push_back(idx);
    }
    std::sort(drawn.begin(), drawn.end());
    for (auto idx : drawn) add(idx);
  }

  const auto& cls0 = bounds.class_pool.front();
  const auto& attr0 = bounds.attr_pool.front();
  if (bounds.type_pool.size() >= 2) {
    base.push_back({GenDecl{cls0, {{attr0, bounds.type_pool[0]}}, false},
                    GenDecl{cls0, {{attr0, bounds.type_pool[1]}}, false}});
    labels.push_back("contradiction");
  } else if (bounds.include_complete) {
    base.push_back({GenDecl{cls0, {}, true},
                    GenDecl{cls0, {{attr0, bounds.type_pool[0]}}, false}});
    labels.push_back("contradiction");
  }

  if (bounds.inject_variants) {
    constexpr std::size_t kPerKind = 4;
    const std::size_t n = base.size();
    std::size_t made = 0;
    for (std::size_t i = 0; i < n && made < kPerKind; ++i) {
      if (base[i].size() < 2) continue;
      auto reversed = base[i];
      std::reverse(reversed.begin(), reversed.end());
      base.push_back(std::move(reversed));
      labels.push_back("perm:" + labels[i]);
      ++made;
    }
    made = 0;
    for (std::size_t i = 0; i < n && made < kPerKind; ++i) {
      if (base[i].empty()) continue;
      auto dup = base[i];
      dup.push_back(base[i].front());
      base.push_back(std::move(dup));
      labels.push_back("dup:" + labels[i]);
      ++made;
    }
  }

  for (const auto& decls : base) corpus.models.push_back(expand(decls));
  corpus.labels = std::move(labels);

  std::ostringstream desc;
  desc << "generated classes=" << join(bounds.class_pool) << " attrs=" << join(bounds.attr_pool)
       << " types=" << join(bounds.type_pool) << " max_classes=" << bounds.max_classes
       << " max_attrs=" << bounds.max_attrs_per_class
       << " complete=" << (bounds.include_complete ? "on" : "off")
       << " variants=" << (bounds.inject_variants ? "on" : "off") << " seed=" << seed;
  corpus.description = desc.str();
  return corpus;
}

Model load_model(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  auto result = parse(buf.str());
  if (!result.ok()) {
    std::string msg;
    for (const auto& d : result.diagnostics) {
      msg += (msg.empty() ? "" : "\n") + file.string() + ": " + format_diagnostic(d);
    }
    throw std::runtime_error(msg);
  }
  return std::move(*result.model);
}

Corpus load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error("corpus directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".mcd") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("corpus is empty: " + dir.string());

  Corpus corpus;
  corpus.origin = Corpus::Origin::files;
  corpus.description = "files " + dir.string();
  for (const auto& f : files) {
    corpus.models.push_back(load_model(f));
    corpus.labels.push_back(f.filename().string());
  }
  return corpus;
}

}  // namespace mcalg
