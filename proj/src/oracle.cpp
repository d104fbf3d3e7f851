#include "quivexp/oracle.hpp"

#include "quivexp/errors.hpp"

#include <fstream>
#include <random>

namespace quivexp {

FiniteFieldRep::FiniteFieldRep(std::uint32_t p, Quiver quiver, DimVector d,
                               std::vector<FpMatrix> matrices)
    : p_(p), quiver_(std::move(quiver)), d_(std::move(d)), matrices_(std::move(matrices)) {
  PrimeField check(p_);
  if (static_cast<int>(d_.size()) != quiver_.vertex_count()) {
    throw InputError("representation dimension vector does not match the quiver");
  }
  if (matrices_.size() != quiver_.arrows().size()) {
    throw InputError("representation needs one matrix per arrow");
  }
  for (std::size_t a = 0; a < matrices_.size(); ++a) {
    const Arrow& arrow = quiver_.arrows()[a];
    const FpMatrix& m = matrices_[a];
    if (m.rows() != static_cast<std::size_t>(d_[arrow.target]) ||
        m.cols() != static_cast<std::size_t>(d_[arrow.source])) {
      throw InputError("matrix " + std::to_string(a + 1) + " has shape " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       ", expected " + std::to_string(d_[arrow.target]) + "x" +
                       std::to_string(d_[arrow.source]));
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::uint32_t x : m.row(i)) {
        if (x >= p_) throw InputError("matrix entry not reduced mod p");
      }
    }
  }
}

namespace {

void require_kronecker(const FiniteFieldRep& rep) {
  if (!rep.quiver().is_kronecker()) {
    throw InputError("operation needs a representation of a Kronecker quiver");
  }
}

// Rank of { f(u) : f an arrow map, u among the first `rows` rows of basis }.
std::size_t image_rank(const FiniteFieldRep& rep, const PrimeField& field, const FpMatrix& basis,
                       std::size_t rows, std::vector<std::uint32_t>& scratch) {
  const std::size_t target_dim = static_cast<std::size_t>(rep.dim()[1]);
  const std::size_t count = rows * rep.matrices().size();
  scratch.assign(count * target_dim, 0);
  std::size_t k = 0;
  for (const FpMatrix& f : rep.matrices()) {
    for (std::size_t r = 0; r < rows; ++r, ++k) {
      f.apply(field, basis.row(r), std::span(scratch).subspan(k * target_dim, target_dim));
    }
  }
  return rank_in_place(field, scratch, count, target_dim);
}

}  // namespace

std::size_t image_sum_dim(const FiniteFieldRep& rep, const Subspace& u) {
  require_kronecker(rep);
  if (u.ambient_dim() != static_cast<std::size_t>(rep.dim()[0]) || u.p() != rep.p()) {
    throw InputError("subspace does not live in the source space of the representation");
  }
  std::vector<std::uint32_t> scratch;
  return image_rank(rep, rep.field(), u.basis(), u.dim(), scratch);
}

ExpanderVerdict is_expander_rep(const FiniteFieldRep& rep, const ExpanderParams& params,
                                std::uint64_t budget) {
  require_kronecker(rep);
  const std::int64_t d1 = rep.dim()[0];
  const std::int64_t d2 = rep.dim()[1];
  if (d1 < 1 || d2 < 1) {
    throw InputError("expander verification needs non-zero spaces");
  }
  const PrimeField field = rep.field();
  const Rational slope = (1 + params.epsilon()) * Rational(d2, d1);
  const BigInt max_dim = floor_of(params.delta() * d1);
  std::vector<std::uint32_t> scratch;
  std::uint64_t visited = 0;

  for (int k = 1; k <= max_dim; ++k) {
    const Rational needed = slope * k;
    std::optional<Subspace> witness;
    EchelonVisitor visitor{
        [&](const FpMatrix& partial, std::size_t filled) {
          return Rational(image_rank(rep, field, partial, filled, scratch)) < needed;
        },
        [&](const Subspace& u) {
          if (Rational(image_rank(rep, field, u.basis(), u.dim(), scratch)) < needed) {
            witness = u;
            return true;
          }
          return false;
        }};
    if (walk_subspaces(rep.p(), static_cast<int>(d1), k, visitor, visited, budget)) {
      return {false, std::move(witness)};
    }
  }
  return {true, std::nullopt};
}

namespace {

struct SubrepSearch {
  const FiniteFieldRep& rep;
  const DimVector& e;
  PrimeField field;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::vector<int> order;
  std::vector<int> position;                     // vertex -> index in order
  std::vector<std::vector<std::size_t>> in_arrows;
  std::vector<std::vector<std::size_t>> out_arrows;
  std::vector<std::vector<std::vector<std::uint32_t>>> chosen;  // basis vectors per vertex

  std::vector<std::uint32_t> image(std::size_t arrow, const std::vector<std::uint32_t>& v) const {
    const FpMatrix& f = rep.matrices()[arrow];
    std::vector<std::uint32_t> out(f.rows());
    f.apply(field, v, out);
    return out;
  }

  // Vectors forced into `target` by already chosen vertices plus `extra`
  // (images of the candidate basis at `source`).
  std::size_t forced_rank(int target, int source,
                          const std::vector<std::vector<std::uint32_t>>& candidate) const {
    const std::size_t dim = static_cast<std::size_t>(rep.dim()[target]);
    std::vector<std::uint32_t> buffer;
    std::size_t rows = 0;
    for (std::size_t a : in_arrows[target]) {
      const int s = rep.quiver().arrows()[a].source;
      const auto& basis = s == source ? candidate : chosen[s];
      if (s != source && position[s] > position[source]) continue;
      for (const auto& v : basis) {
        auto w = image(a, v);
        buffer.insert(buffer.end(), w.begin(), w.end());
        ++rows;
      }
    }
    return rank_in_place(field, buffer, rows, dim);
  }

  bool targets_fit(int v, const std::vector<std::vector<std::uint32_t>>& candidate) const {
    for (std::size_t a : out_arrows[v]) {
      const int t = rep.quiver().arrows()[a].target;
      if (forced_rank(t, v, candidate) > static_cast<std::size_t>(e[t])) return false;
    }
    return true;
  }

  bool search(std::size_t idx) {
    if (idx == order.size()) return true;
    const int v = order[idx];
    const std::size_t dim = static_cast<std::size_t>(rep.dim()[v]);

    // Span of the images already forced into v.
    FpMatrix forced(0, dim);
    {
      std::vector<std::vector<std::uint32_t>> rows;
      for (std::size_t a : in_arrows[v]) {
        for (const auto& u : chosen[rep.quiver().arrows()[a].source]) rows.push_back(image(a, u));
      }
      FpMatrix gen(rows.size(), dim);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::copy(rows[i].begin(), rows[i].end(), gen.row(i).begin());
      }
      forced = rref(field, gen);
    }
    const std::size_t r = forced.rows();
    if (r > static_cast<std::size_t>(e[v])) return false;

    std::vector<std::vector<std::uint32_t>> base;
    for (std::size_t i = 0; i < r; ++i) base.emplace_back(forced.row(i).begin(), forced.row(i).end());

    if (out_arrows[v].empty()) {
      // A sink only has to absorb what is forced into it.
      chosen[v] = base;
      return search(idx + 1);
    }

    // Subspaces containing the forced span correspond to subspaces of the
    // quotient, coordinatized by the non-pivot columns of the forced basis.
    std::vector<char> pivot_col(dim, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        if (forced(i, j) != 0) {
          pivot_col[j] = 1;
          break;
        }
      }
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!pivot_col[j]) free_cols.push_back(j);
    }

    auto lift = [&](const FpMatrix& rows, std::size_t count) {
      auto basis = base;
      for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::uint32_t> x(dim, 0);
        for (std::size_t j = 0; j < free_cols.size(); ++j) x[free_cols[j]] = rows(i, j);
        basis.push_back(std::move(x));
      }
      return basis;
    };

    bool found = false;
    EchelonVisitor visitor{
        [&](const FpMatrix& partial, std::size_t filled) {
          return targets_fit(v, lift(partial, filled));
        },
        [&](const Subspace& w) {
          auto basis = lift(w.basis(), w.dim());
          if (!targets_fit(v, basis)) return false;
          chosen[v] = std::move(basis);
          found = search(idx + 1);
          return found;
        }};
    walk_subspaces(rep.p(), static_cast<int>(free_cols.size()), static_cast<int>(e[v] - r),
                   visitor, visited, budget);
    return found;
  }
};

}  // namespace

bool has_subrep_of_dim(const FiniteFieldRep& rep, const DimVector& e, std::uint64_t budget) {
  if (e.size() != rep.dim().size()) {
    throw InputError("dimension vector " + e.to_string() + " does not match the representation");
  }
  if (!e.fits_in(rep.dim())) {
    throw InputError("subrepresentation dimension " + e.to_string() + " exceeds " +
                     rep.dim().to_string());
  }
  const Quiver& q = rep.quiver();
  SubrepSearch s{rep, e, rep.field(), budget, 0, {}, {}, {}, {}, {}};
  s.order = q.topological_order();
  s.position.assign(q.vertex_count(), 0);
  for (std::size_t i = 0; i < s.order.size(); ++i) s.position[s.order[i]] = static_cast<int>(i);
  s.in_arrows.assign(q.vertex_count(), {});
  s.out_arrows.assign(q.vertex_count(), {});
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    s.in_arrows[q.arrows()[a].target].push_back(a);
    s.out_arrows[q.arrows()[a].source].push_back(a);
  }
  s.chosen.assign(q.vertex_count(), {});
  return s.search(0);
}

FiniteFieldRep random_rep(const Quiver& quiver, const DimVector& d, std::uint32_t p,
                          std::uint64_t seed) {
  PrimeField check(p);
  if (static_cast<int>(d.size()) != quiver.vertex_count()) {
    throw InputError("dimension vector does not match the quiver");
  }
  std::mt19937_64 gen(seed);
  const std::uint64_t reject_below = (0 - static_cast<std::uint64_t>(p)) % p;  // 2^64 mod p
  auto draw = [&]() {
    std::uint64_t x = gen();
    while (x < reject_below) x = gen();
    return static_cast<std::uint32_t>(x % p);
  };
  std::vector<FpMatrix> matrices;
  for (const Arrow& a : quiver.arrows()) {
    FpMatrix m(d[a.target], d[a.source]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = draw();
    }
    matrices.push_back(std::move(m));
  }
  return FiniteFieldRep(p, quiver, d, std::move(matrices));
}

FiniteFieldRep dual_rep(const FiniteFieldRep& rep) {
  require_kronecker(rep);
  std::vector<FpMatrix> transposed;
  for (const FpMatrix& m : rep.matrices()) transposed.push_back(m.transposed());
  return FiniteFieldRep(rep.p(), rep.quiver(), DimVector{rep.dim()[1], rep.dim()[0]},
                        std::move(transposed));
}

FiniteFieldRep with_identity_first_arrow(FiniteFieldRep rep) {
  require_kronecker(rep);
  if (rep.dim()[0] != rep.dim()[1]) {
    throw InputError("identity first arrow needs d1 == d2");
  }
  auto matrices = rep.matrices();
  matrices[0] = FpMatrix::identity(rep.dim()[0]);
  return FiniteFieldRep(rep.p(), rep.quiver(), rep.dim(), std::move(matrices));
}

namespace {

nlohmann::json matrix_to_json(const FpMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(std::vector<std::uint32_t>(m.row(i).begin(), m.row(i).end()));
  }
  return rows;
}

}  // namespace

nlohmann::json rep_to_json(const FiniteFieldRep& rep) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const Arrow& a : rep.quiver().arrows()) arrows.push_back({a.source + 1, a.target + 1});
  nlohmann::json matrices = nlohmann::json::array();
  for (const FpMatrix& m : rep.matrices()) matrices.push_back(matrix_to_json(m));
  return {{"p", rep.p()},
          {"quiver", {{"vertices", rep.quiver().vertex_count()}, {"arrows", arrows}}},
          {"dim", rep.dim().entries()},
          {"matrices", matrices}};
}

FiniteFieldRep rep_from_json(const nlohmann::json& j) {
  try {
    const auto p = j.at("p").get<std::int64_t>();
    if (p < 2 || p >= (std::int64_t{1} << 31)) throw InputError("p must be a prime below 2^31");
    const auto& qj = j.at("quiver");
    const int n = qj.at("vertices").get<int>();
    std::vector<Arrow> arrows;
    for (const auto& a : qj.at("arrows")) {
      if (!a.is_array() || a.size() != 2) throw InputError("arrow must be a pair [i, j]");
      arrows.push_back({a[0].get<int>() - 1, a[1].get<int>() - 1});
    }
    Quiver quiver(n, std::move(arrows));
    DimVector d(j.at("dim").get<std::vector<std::int64_t>>());
    if (static_cast<int>(d.size()) != n) throw InputError("dim length does not match vertices");
    const auto& mj = j.at("matrices");
    if (!mj.is_array() || mj.size() != quiver.arrows().size()) {
      throw InputError("representation needs one matrix per arrow");
    }
    std::vector<FpMatrix> matrices;
    for (std::size_t a = 0; a < mj.size(); ++a) {
      const Arrow& arrow = quiver.arrows()[a];
      const std::size_t rows = d[arrow.target];
      const std::size_t cols = d[arrow.source];
      const auto& mat = mj[a];
      if (!mat.is_array() || mat.size() != rows) {
        throw InputError("matrix " + std::to_string(a + 1) + " must have " +
                         std::to_string(rows) + " rows");
      }
      FpMatrix m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        if (!mat[i].is_array() || mat[i].size() != cols) {
          throw InputError("matrix " + std::to_string(a + 1) + " row " + std::to_string(i + 1) +
                           " must have " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
          const auto x = mat[i][c].get<std::int64_t>();
          if (x < 0 || x >= p) throw InputError("matrix entry not reduced mod p");
          m(i, c) = static_cast<std::uint32_t>(x);
        }
      }
      matrices.push_back(std::move(m));
    }
    return FiniteFieldRep(static_cast<std::uint32_t>(p), std::move(quiver), std::move(d),
                          std::move(matrices));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed representation JSON: ") + ex.what());
  }
}

FiniteFieldRep load_rep(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open representation file '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError("representation file '" + path + "' is not valid JSON: " + ex.what());
  }
  return rep_from_json(j);
}

nlohmann::json subspace_to_json(const Subspace& u) {
  return {{"dim", u.dim()}, {"basis", matrix_to_json(u.basis())}};
}

}  // namespace quivexp
