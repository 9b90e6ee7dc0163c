#include "semcom/ldpc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace semcom {

namespace {

double clip(double v, double limit) { return std::clamp(v, -limit, limit); }

struct EdgeGraph {
  std::vector<unsigned> rows;  // per edge
  std::vector<unsigned> cols;
};

// Counts duplicate edges and 4-cycles (row pairs shared by two columns).
// Returns indices of edges involved in a violation.
std::vector<size_t> find_violations(const EdgeGraph& g, unsigned n, unsigned m) {
  std::vector<size_t> bad;
  std::unordered_map<uint64_t, size_t> seen_edge;
  std::vector<std::vector<std::pair<unsigned, size_t>>> col_rows(n);  // (row, edge idx)
  for (size_t e = 0; e < g.rows.size(); ++e) {
    uint64_t key = static_cast<uint64_t>(g.rows[e]) * n + g.cols[e];
    auto [it, inserted] = seen_edge.emplace(key, e);
    if (!inserted) bad.push_back(e);
    col_rows[g.cols[e]].push_back({g.rows[e], e});
  }
  std::unordered_map<uint64_t, size_t> row_pair;  // row pair -> witness edge
  for (unsigned c = 0; c < n; ++c) {
    auto& rows = col_rows[c];
    for (size_t i = 0; i < rows.size(); ++i) {
      for (size_t j = i + 1; j < rows.size(); ++j) {
        unsigned r1 = std::min(rows[i].first, rows[j].first);
        unsigned r2 = std::max(rows[i].first, rows[j].first);
        if (r1 == r2) continue;  // duplicate edge, already flagged
        uint64_t key = static_cast<uint64_t>(r1) * m + r2;
        auto [it, inserted] = row_pair.emplace(key, rows[i].second);
        if (!inserted) bad.push_back(rows[i].second);
      }
    }
  }
  return bad;
}

}  // namespace

LdpcCode LdpcCode::construct(unsigned n, unsigned m, uint64_t seed, int max_bp_iters) {
  if (m == 0 || m >= n) throw std::invalid_argument("LdpcCode: need 0 < m < n");
  constexpr unsigned kColumnWeight = 3;

  for (uint64_t attempt_seed = seed;; ++attempt_seed) {
    std::mt19937_64 rng(attempt_seed);

    EdgeGraph g;
    for (unsigned c = 0; c < n; ++c)
      for (unsigned w = 0; w < kColumnWeight; ++w) g.cols.push_back(c);
    const size_t edges = g.cols.size();

    // Row stubs, as regular as 3n/m allows.
    g.rows.reserve(edges);
    unsigned base = static_cast<unsigned>(edges / m), extra = static_cast<unsigned>(edges % m);
    for (unsigned r = 0; r < m; ++r)
      for (unsigned w = 0; w < base + (r < extra ? 1 : 0); ++w) g.rows.push_back(r);

    for (size_t i = edges - 1; i > 0; --i) {
      size_t j = static_cast<size_t>(rng() % (i + 1));
      std::swap(g.rows[i], g.rows[j]);
    }

    // Resample offending edges until the graph is simple and 4-cycle-free,
    // within an effort budget.
    bool clean = false;
    for (int pass = 0; pass < 400; ++pass) {
      auto bad = find_violations(g, n, m);
      if (bad.empty()) {
        clean = true;
        break;
      }
      for (size_t e : bad) {
        size_t other = static_cast<size_t>(rng() % edges);
        std::swap(g.rows[e], g.rows[other]);
      }
    }
    if (!clean) {
      // High-rate codes cannot be 4-cycle-free; accept the graph once it is
      // at least simple (no duplicate edges).
      bool has_dup = true;
      for (int pass = 0; pass < 400 && has_dup; ++pass) {
        std::unordered_set<uint64_t> seen;
        has_dup = false;
        for (size_t e = 0; e < edges; ++e) {
          uint64_t key = static_cast<uint64_t>(g.rows[e]) * n + g.cols[e];
          if (!seen.insert(key).second) {
            std::swap(g.rows[e], g.rows[rng() % edges]);
            has_dup = true;
          }
        }
      }
      if (has_dup) continue;
    }

    LdpcCode code;
    code.n_ = n;
    code.m_ = m;
    code.max_bp_iters_ = max_bp_iters;
    code.seed_used_ = attempt_seed;
    code.edge_row_ = std::move(g.rows);
    code.edge_col_ = std::move(g.cols);
    code.build_adjacency();
    if (code.derive_generator()) return code;
    // Rank-deficient H: resample with the next seed.
  }
}

void LdpcCode::build_adjacency() {
  row_edges_.assign(m_, {});
  col_edges_.assign(n_, {});
  for (size_t e = 0; e < edge_row_.size(); ++e) {
    row_edges_[edge_row_[e]].push_back(static_cast<unsigned>(e));
    col_edges_[edge_col_[e]].push_back(static_cast<unsigned>(e));
  }
}

bool LdpcCode::derive_generator() {
  const size_t words = (n_ + 63) / 64;
  std::vector<std::vector<uint64_t>> h(m_, std::vector<uint64_t>(words, 0));
  for (size_t e = 0; e < edge_row_.size(); ++e)
    h[edge_row_[e]][edge_col_[e] / 64] ^= 1ull << (edge_col_[e] % 64);

  // Gauss-Jordan with column pivoting; pivot columns become parity positions.
  std::vector<unsigned> pivot_col;
  unsigned rank = 0;
  for (unsigned c = 0; c < n_ && rank < m_; ++c) {
    unsigned pivot = m_;
    for (unsigned r = rank; r < m_; ++r) {
      if (h[r][c / 64] >> (c % 64) & 1ull) {
        pivot = r;
        break;
      }
    }
    if (pivot == m_) continue;
    std::swap(h[rank], h[pivot]);
    for (unsigned r = 0; r < m_; ++r) {
      if (r != rank && (h[r][c / 64] >> (c % 64) & 1ull)) {
        for (size_t w = 0; w < words; ++w) h[r][w] ^= h[rank][w];
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank < m_) return false;

  parity_positions_ = pivot_col;
  info_positions_.clear();
  std::vector<bool> is_parity(n_, false);
  for (unsigned c : parity_positions_) is_parity[c] = true;
  for (unsigned c = 0; c < n_; ++c)
    if (!is_parity[c]) info_positions_.push_back(c);

  // Row r of the reduced system: c[pivot_col[r]] = sum over info columns of
  // h[r][col] * c[col]. Repack those coefficients over the k info columns.
  const unsigned k = n_ - m_;
  const size_t kwords = (k + 63) / 64;
  parity_rows_.assign(m_, std::vector<uint64_t>(kwords, 0));
  for (unsigned r = 0; r < m_; ++r) {
    for (unsigned j = 0; j < k; ++j) {
      unsigned c = info_positions_[j];
      if (h[r][c / 64] >> (c % 64) & 1ull) parity_rows_[r][j / 64] ^= 1ull << (j % 64);
    }
  }
  return true;
}

std::vector<uint8_t> LdpcCode::encode(std::span<const uint8_t> message_bits) const {
  if (message_bits.size() != k()) throw std::invalid_argument("ldpc_encode: wrong message length");
  const size_t kwords = (k() + 63) / 64;
  std::vector<uint64_t> msg(kwords, 0);
  for (unsigned j = 0; j < k(); ++j)
    if (message_bits[j] & 1) msg[j / 64] ^= 1ull << (j % 64);

  std::vector<uint8_t> codeword(n_, 0);
  for (unsigned j = 0; j < k(); ++j) codeword[info_positions_[j]] = message_bits[j] & 1;
  for (unsigned r = 0; r < m_; ++r) {
    uint64_t acc = 0;
    for (size_t w = 0; w < kwords; ++w) acc ^= parity_rows_[r][w] & msg[w];
    codeword[parity_positions_[r]] = static_cast<uint8_t>(__builtin_popcountll(acc) & 1);
  }
  return codeword;
}

bool LdpcCode::check_syndrome(std::span<const uint8_t> codeword_bits) const {
  if (codeword_bits.size() != n_) throw std::invalid_argument("ldpc check_syndrome: wrong length");
  for (unsigned r = 0; r < m_; ++r) {
    unsigned s = 0;
    for (unsigned e : row_edges_[r]) s ^= codeword_bits[edge_col_[e]] & 1;
    if (s) return false;
  }
  return true;
}

LdpcCode::BpResult LdpcCode::decode(std::span<const double> llrs) const {
  if (llrs.size() != n_) throw std::invalid_argument("ldpc_decode: wrong LLR count");
  const size_t edges = edge_row_.size();
  std::vector<double> channel(n_);
  for (unsigned c = 0; c < n_; ++c) channel[c] = clip(llrs[c], kLlrClip);

  std::vector<double> v2c(edges), c2v(edges, 0.0), total(n_);
  for (size_t e = 0; e < edges; ++e) v2c[e] = channel[edge_col_[e]];

  std::vector<uint8_t> hard(n_, 0);
  BpResult result;

  std::vector<double> t;  // per-row tanh scratch
  for (int iter = 1; iter <= max_bp_iters_; ++iter) {
    // Check-node pass with prefix/suffix products (no division, zeros safe).
    for (unsigned r = 0; r < m_; ++r) {
      const auto& re = row_edges_[r];
      t.resize(re.size());
      for (size_t i = 0; i < re.size(); ++i) t[i] = std::tanh(0.5 * v2c[re[i]]);
      double prefix = 1.0;
      std::vector<double> suffix(re.size() + 1, 1.0);
      for (size_t i = re.size(); i-- > 0;) suffix[i] = suffix[i + 1] * t[i];
      for (size_t i = 0; i < re.size(); ++i) {
        double ex = prefix * suffix[i + 1];
        ex = std::clamp(ex, -(1.0 - 1e-12), 1.0 - 1e-12);
        c2v[re[i]] = clip(2.0 * std::atanh(ex), kLlrClip);
        prefix *= t[i];
      }
    }

    // Variable-node pass and tentative decision.
    for (unsigned c = 0; c < n_; ++c) {
      double sum = channel[c];
      for (unsigned e : col_edges_[c]) sum += c2v[e];
      total[c] = sum;
      hard[c] = sum < 0.0 ? 1 : 0;
      for (unsigned e : col_edges_[c]) v2c[e] = clip(sum - c2v[e], kLlrClip);
    }

    result.iterations = iter;
    if (check_syndrome(hard)) {
      result.converged = true;
      break;
    }
  }

  result.codeword = hard;
  result.message.resize(k());
  for (unsigned j = 0; j < k(); ++j) result.message[j] = hard[info_positions_[j]];
  return result;
}

void LdpcCode::write_coordinates(std::ostream& out) const {
  std::vector<std::pair<unsigned, unsigned>> coords;
  coords.reserve(edge_row_.size());
  for (size_t e = 0; e < edge_row_.size(); ++e) coords.push_back({edge_row_[e], edge_col_[e]});
  std::sort(coords.begin(), coords.end());
  for (const auto& [r, c] : coords) out << r << " " << c << "\n";
}

unsigned LdpcCode::column_weight(unsigned col) const { return static_cast<unsigned>(col_edges_.at(col).size()); }
unsigned LdpcCode::row_weight(unsigned row) const { return static_cast<unsigned>(row_edges_.at(row).size()); }

bool LdpcCode::has_four_cycle() const {
  std::set<std::pair<unsigned, unsigned>> row_pairs;
  for (unsigned c = 0; c < n_; ++c) {
    std::vector<unsigned> rows;
    for (unsigned e : col_edges_[c]) rows.push_back(edge_row_[e]);
    std::sort(rows.begin(), rows.end());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = i + 1; j < rows.size(); ++j) {
        if (rows[i] == rows[j]) return true;
        if (!row_pairs.insert({rows[i], rows[j]}).second) return true;
      }
  }
  return false;
}

}  // namespace semcom
