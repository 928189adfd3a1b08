#include "qpart/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qpart/bounds.hpp"
#include "qpart/growth.hpp"
#include "qpart/measures.hpp"
#include "qpart/partition.hpp"
#include "qpart/permutation.hpp"
#include "qpart/qarith.hpp"

namespace qpart {

namespace {

constexpr const char* kManifestJson =
#include "qpart/verify_manifest.inc"
    ;

/// Records the first failing case; later failures only bump the count.
class Outcome {
 public:
  explicit Outcome(std::string id) : id_(std::move(id)) {}

  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }

  CheckResult finish() const {
    CheckResult r;
    r.id = id_;
    r.passed = failures_ == 0 && cases_ > 0;
    std::ostringstream os;
    if (cases_ == 0) {
      os << "no cases executed";
    } else if (failures_ == 0) {
      os << cases_ << " cases";
    } else {
      os << failures_ << "/" << cases_ << " cases failed; first: " << first_;
    }
    r.detail = os.str();
    return r;
  }

 private:
  std::string id_;
  long cases_ = 0;
  long failures_ = 0;
  std::string first_;
};

std::string ctx(const Rational& q, int n, int extra = -1, const char* extra_name = "r") {
  std::string s = "q=" + q.str() + " n=" + std::to_string(n);
  if (extra >= 0) s += std::string(" ") + extra_name + "=" + std::to_string(extra);
  return s;
}

using Check = std::function<CheckResult(const VerifyOptions&)>;

std::vector<std::pair<std::string, Check>> registry() {
  std::vector<std::pair<std::string, Check>> checks;
  auto add = [&checks](std::string id, std::function<void(const VerifyOptions&, Outcome&)> body) {
    checks.emplace_back(id, [id, body](const VerifyOptions& o) {
      Outcome out(id);
      try {
        body(o, out);
      } catch (const std::exception& e) {
        out.expect(false, std::string("exception: ") + e.what());
      }
      return out.finish();
    });
  };
  auto two_or_more = [](const VerifyOptions& o) {
    std::vector<Rational> qs;
    for (const auto& q : o.q_set) {
      if (q >= Rational(2)) qs.push_back(q);
    }
    return qs;
  };

  add("exponent-identity", [](const VerifyOptions& o, Outcome& out) {
    for (int n = 0; n <= o.n_max; ++n) {
      for (const auto& l : enumerate_partitions(n)) {
        out.expect(l.size() + 2 * n_lambda(l) == colsq_sum(l), l.str());
      }
    }
  });

  add("euler-product", [two_or_more](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : two_or_more(o)) {
      for (int n = 0; n <= o.n_max; ++n) {
        const auto rep = euler_convergence_report(n, q, n + 50);
        out.expect(rep.gap * pow(Rational(2), 40) < rep.limit, ctx(q, n) + " gap");
        Rational total;
        for (const auto& l : enumerate_partitions(n)) total += p_weight(l, q);
        out.expect(total == euler_coeff(n, q), ctx(q, n) + " weight sum");
      }
    }
  });

  add("p-normalization", [](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : o.q_set) {
      for (int n = 0; n <= o.n_max; ++n) out.expect(p_pmf(n, q).total() == Rational(1), ctx(q, n));
    }
  });

  add("q-normalization", [](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : o.q_set) {
      for (int n = 0; n <= o.n_max; ++n) out.expect(q_pmf(n, q).total() == Rational(1), ctx(q, n));
    }
  });

  add("neumann-praeger", [two_or_more](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : two_or_more(o)) out.expect(neumann_check(q, 50), "q=" + q.str());
  });

  add("first-column-finite", [](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : o.q_set) {
      for (int n = 1; n <= o.n_max; ++n) {
        const Pmf pmf = p_pmf(n, q);
        for (int k = 1; k <= n; ++k) {
          const Rational marginal = pmf.mass([k](const Partition& l) { return l.length() == k; });
          out.expect(p_first_column(n, q, k) == marginal, ctx(q, n, k, "k"));
        }
      }
    }
  });

  add("first-column-limit", [two_or_more](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : two_or_more(o)) {
      for (int k = 0; k <= 4; ++k) {
        out.expect(tilde_first_column_check(k, q, 40, o.truncation), "q=" + q.str() + " k=" + std::to_string(k));
      }
    }
  });

  add("rogers-selberg-tail", [](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : o.q_set) {
      for (int n = 0; n <= o.n_max; ++n) {
        for (int r = 1; r <= n + 2; ++r) {
          out.expect(p_row_tail_rs(n, q, r) == p_row_tail_direct(n, q, r), ctx(q, n, r));
        }
      }
    }
  });

  add("p-row-bounds", [two_or_more](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : two_or_more(o)) {
      for (int n = 2; n <= o.n_max; ++n) {
        const Pmf pmf = p_pmf(n, q);
        for (int r = 1; r <= n - 1; ++r) {
          const Rational exact = pmf.mass([r](const Partition& l) { return l.first_row() < r; });
          out.expect(pbound_lower(n, r, q) <= exact && exact <= pbound_upper(n, r, q), ctx(q, n, r));
        }
      }
    }
  });

  add("young-lattice-paths", [](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : o.q_set) {
      const GrowthDP dp(o.n_max, q);
      for (const auto& [lambda, f] : dp.table()) out.expect(f == p_weight(lambda, q), "q=" + q.str() + " " + lambda.str());
    }
  });

  add("outflow-closed-form", [two_or_more](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : two_or_more(o)) {
      for (int n = 1; n <= o.n_max; ++n) {
        const Rational damping = q * (Rational(1) - pow(q, -(n + 1)));
        for (const auto& l : enumerate_partitions(n)) {
          const Rational closed = outflow(l, q);
          out.expect(closed == outflow_direct(l, q), "q=" + q.str() + " " + l.str());
          if (l.length() >= 2) out.expect(damping * closed <= Rational(1), "substochastic " + l.str());
        }
      }
    }
  });

  add("syt-refinement", [](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : o.q_set) {
      for (int n = 0; n <= std::min(o.n_max, 8); ++n) {
        Pmf::Table marginal;
        Rational total;
        for (const auto& path : syt_pmf(n, q)) {
          marginal[path.shape()] += path.probability;
          total += path.probability;
        }
        out.expect(total == Rational(1), ctx(q, n) + " total");
        out.expect(marginal == p_pmf(n, q).entries, ctx(q, n) + " marginal");
      }
    }
  });

  add("monotone-row-tail", [two_or_more](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : two_or_more(o)) {
      for (int n = 0; n <= o.n_max; ++n) {
        for (int r = 1; r <= n + 2; ++r) out.expect(monotone_check(n, r, q), ctx(q, n, r));
      }
    }
  });

  add("hook-rewrite", [](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : o.q_set) {
      for (int n = 0; n <= o.n_max; ++n) {
        for (const auto& l : enumerate_partitions(n)) out.expect(tilde_p_hook_identity(l, q), "q=" + q.str() + " " + l.str());
      }
    }
  });

  add("schur-construction", [](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : o.q_set) {
      for (int n = 1; n <= o.n_max; ++n) out.expect(construction1_check(n, q), ctx(q, n));
    }
  });

  add("rsk-construction", [](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : o.q_set) {
      for (int n = 1; n <= std::min(o.n_max, o.perm_n_max); ++n) {
        out.expect(shape_pushforward(n, q, o.perm_n_max).entries == q_pmf(n, q).entries, ctx(q, n));
      }
    }
  });

  add("q-symmetry", [](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : o.q_set) {
      for (int n = 1; n <= o.n_max; ++n) out.expect(symmetry_check(n, q), ctx(q, n));
    }
  });

  add("double-product-bound", [two_or_more](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : two_or_more(o)) out.expect(prelim_check(q, o.truncation), "q=" + q.str());
  });

  add("z-recurrence", [](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : o.q_set) {
      const ZTable table = z_table(o.n_max, q);
      for (int n = 0; n <= o.n_max; ++n) {
        out.expect(table.values[static_cast<std::size_t>(n)] == z_direct(n, q), ctx(q, n));
      }
    }
  });

  add("z-bounds", [two_or_more](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : two_or_more(o)) {
      for (int n = 1; n <= o.n_max; ++n) out.expect(boundconst_check(n, q), ctx(q, n));
    }
  });

  add("compare-sandwich", [two_or_more](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : two_or_more(o)) {
      for (int n = 1; n <= o.n_max; ++n) out.expect(compare_sandwich_check(n, q), ctx(q, n));
    }
  });

  add("q-row-bounds", [two_or_more](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : two_or_more(o)) {
      for (int n = 2; n <= o.n_max; ++n) {
        const Pmf pmf = q_pmf(n, q);
        for (int r = 1; r <= n - 1; ++r) {
          const Rational exact = pmf.mass([r](const Partition& l) { return l.first_row() < r; });
          out.expect(qbound_lower(n, r, q) <= exact && exact <= qbound_upper(n, r, q), ctx(q, n, r));
          out.expect(exact <= qbound_upper_literal(n, r, q).lo(), ctx(q, n, r) + " literal exponent");
        }
      }
    }
  });

  add("q-column-corollary", [two_or_more](const VerifyOptions& o, Outcome& out) {
    for (const auto& q : two_or_more(o)) {
      for (int n = 1; n <= o.n_max; ++n) {
        for (int k = 1; k <= n; ++k) out.expect(corollary_check(n, q, k), ctx(q, n, k, "k"));
      }
    }
  });

  add("lis-lds-rsk", [](const VerifyOptions& o, Outcome& out) {
    for (int n = 1; n <= std::min(o.n_max, 6); ++n) {
      std::vector<int> w = Permutation::identity(n).word();
      do {
        const Partition shape = rsk_shape(std::span<const int>(w));
        out.expect(lis(std::span<const int>(w)) == shape.first_row() &&
                       lds(std::span<const int>(w)) == shape.length(),
                   Permutation(w).str());
      } while (std::next_permutation(w.begin(), w.end()));
    }
  });

  return checks;
}

}  // namespace

const std::vector<ManifestEntry>& verification_manifest() {
  static const std::vector<ManifestEntry> manifest = [] {
    std::vector<ManifestEntry> out;
    for (const auto& e : nlohmann::json::parse(kManifestJson)) {
      out.push_back({e.at("id").get<std::string>(), e.at("statement").get<std::string>()});
    }
    return out;
  }();
  return manifest;
}

bool VerifyReport::ok() const {
  return missing.empty() &&
         std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

VerifyReport run_verification(const VerifyOptions& options,
                              const std::function<void(const CheckResult&)>& on_result) {
  VerifyReport report;
  std::set<std::string> executed;
  for (const auto& [id, check] : registry()) {
    report.results.push_back(check(options));
    executed.insert(id);
    if (on_result) on_result(report.results.back());
  }
  for (const auto& entry : verification_manifest()) {
    if (executed.count(entry.id) == 0) report.missing.push_back(entry.id);
  }
  return report;
}

}  // namespace qpart
