// Acceptance suite: one PASS/FAIL line per criterion, each with its time
// limit. Optional argv[1] is the canrep executable for the CLI determinism
// run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "dcr/app.hpp"
#include "dcr/canrep.hpp"
#include "dcr/drinfeld.hpp"
#include "dcr/vkdecomp.hpp"

using namespace dcr;

namespace {

const std::vector<std::uint32_t> kOrders = {2, 3, 4, 5, 7, 8, 9};

gfq::FieldPtr field_of(std::uint32_t q) {
  const auto pp = gfq::PrimePower::factor(q);
  return gfq::Field::build(pp.p, pp.r);
}

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s >= limit_s) o.fail("time limit exceeded");
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(3);
  line << id << ' ' << (o.ok ? "PASS" : "FAIL") << "  " << title << "  [" << s << " s / limit "
       << limit_s << " s]";
  if (!o.ok) line << "  " << o.note;
  std::cout << line.str() << std::endl;
  failures += !o.ok;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  criterion("AC1", "dim M = q(q-1)/2 for q in {2,3,4,5,7,8,9}", 7.0, [](Outcome& o) {
    const std::vector<std::size_t> want = {1, 3, 6, 10, 21, 28, 36};
    for (std::size_t i = 0; i < kOrders.size(); ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto f = field_of(kOrders[i]);
      const std::size_t dim = canrep::basis_indices(f->q()).size();
      const auto full = canrep::action_full(sl2::GroupElement::identity(f));
      if (dim != want[i] || full.dim() != want[i] || canrep::genus(f->q()) != want[i])
        o.fail("dimension mismatch at q=" + std::to_string(kOrders[i]));
      const double s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (s >= 1.0) o.fail("q=" + std::to_string(kOrders[i]) + " took over 1 s");
    }
  });

  criterion("AC2", "rho(g)rho(h) = rho(gh): exhaustive q<=5, 10^4 seeded pairs q in {7,8,9}", 60.0,
            [](Outcome& o) {
              for (std::uint32_t q : kOrders) {
                SamplingPolicy policy;
                policy.seed = 1;
                policy.samples = 10'000;
                policy.mode = q <= 5 ? SamplingPolicy::Mode::exhaustive
                                     : SamplingPolicy::Mode::sampled;
                const auto r = canrep::verify_homomorphism(field_of(q), policy);
                const std::size_t order = sl2::group_order(q);
                const std::size_t want = q <= 5 ? order * order : 10'000;
                if (r.pairs_checked != want) o.fail("pair count at q=" + std::to_string(q));
              }
            });

  criterion("AC3", "block diagonal action and T rho_V = rho_W T (generators + 10^3 samples)", 60.0,
            [](Outcome& o) {
              for (std::uint32_t q : kOrders) {
                const auto f = field_of(q);
                for (const auto& g : sl2::enumerate_group(f))
                  if (!canrep::is_block_diagonal(canrep::action_full(g).assembled(), q))
                    o.fail("not block diagonal at q=" + std::to_string(q));
                for (int k = 0; k + 2 <= static_cast<int>(q); ++k) {
                  const auto r = vkdecomp::verify_intertwining(f, k, 1000 + k, 1000);
                  if (r.samples_checked != 1000 || !r.hom_contains_t)
                    o.fail("intertwiner at q=" + std::to_string(q) + ", k=" + std::to_string(k));
                }
              }
            });

  criterion("AC4", "locality certified for every k; embedding chain and augmentation exponent", 120.0,
            [](Outcome& o) {
              for (std::uint32_t q : kOrders) {
                const auto f = field_of(q);
                const auto aug = vkdecomp::augmentation_nilpotency_check(vkdecomp::group_algebra_L(f));
                if (!aug.passed() || aug.expected != f->r() * (f->p() - 1) + 1)
                  o.fail("augmentation exponent at q=" + std::to_string(q));
                for (int k = 0; k + 2 <= static_cast<int>(q); ++k) {
                  const auto c = vkdecomp::locality_certificate(f, k);
                  if (!c.certified())
                    o.fail("inconclusive at q=" + std::to_string(q) + ", k=" + std::to_string(k));
                  const auto e = vkdecomp::embed_vk_into_group_algebra(f, k);
                  if (!e.injective || !e.equivariant || !e.submodule)
                    o.fail("embedding at q=" + std::to_string(q) + ", k=" + std::to_string(k));
                }
              }
            });

  criterion("AC5", "closed-form orders = series orders at infinity; totals q^2-q-2", 30.0,
            [](Outcome& o) {
              for (std::uint32_t q : kOrders) {
                const auto f = field_of(q);
                const long want = static_cast<long>(q) * q - q - 2;
                for (const auto& idx : canrep::basis_indices(q)) {
                  for (const auto& p : drinfeld::points_at_infinity(f))
                    if (drinfeld::vanishing_order_via_series(f, idx.i, idx.j, p) !=
                        drinfeld::vanishing_order_closed_form(q, idx.i, idx.j, p.point_class()))
                      o.fail("order mismatch at q=" + std::to_string(q));
                  if (drinfeld::canonical_degree_check(q, idx.i, idx.j) != want)
                    o.fail("degree total at q=" + std::to_string(q));
                }
              }
            });

  criterion("AC6", "orbit q+1, stabilizer of order q(q-1), free action within caps", 60.0,
            [](Outcome& o) {
              for (std::uint32_t q : kOrders) {
                const auto f = field_of(q);
                const auto t = drinfeld::verify_transitivity_at_infinity(f);
                if (!t.passed() || t.orbit.size() != q + 1 || t.stabilizer.size() != q * (q - 1))
                  o.fail("transitivity at q=" + std::to_string(q));
                for (const auto& g : t.stabilizer)
                  if (g.c() != 0) o.fail("stabilizer not upper triangular");
                const std::uint32_t m = q <= 5 ? 2 : 1;
                const auto fa = drinfeld::verify_free_action(f, m);
                if (!fa.passed()) o.fail("free action at q=" + std::to_string(q));
                if (fa.vacuous != (fa.points == 0)) o.fail("vacuous flag at q=" + std::to_string(q));
              }
            });

  criterion("AC7", "semisimple iff q in {2,3,5,7}; witness k = p; simplicity = digit sets", 1.0,
            [](Outcome& o) {
              for (std::uint32_t q : kOrders) {
                const auto f = field_of(q);
                const auto v = vkdecomp::semisimplicity_check(f);
                const bool prime = f->r() == 1;
                if (v.semisimple != prime) o.fail("verdict at q=" + std::to_string(q));
                if (!prime && (!v.witness || *v.witness != static_cast<int>(f->p())))
                  o.fail("witness at q=" + std::to_string(q));
                for (int k = 0; k + 2 <= static_cast<int>(q); ++k) {
                  bool all_dominated = true;
                  for (int m = 0; m <= k; ++m) {
                    int a = m, b = k;
                    bool dom = true;
                    for (; a > 0 || b > 0; a /= f->p(), b /= f->p())
                      dom = dom && static_cast<std::uint32_t>(a) % f->p() <=
                                       static_cast<std::uint32_t>(b) % f->p();
                    all_dominated = all_dominated && dom;
                  }
                  if (vkdecomp::is_simple(k, f->p()) != all_dominated)
                    o.fail("digit set at q=" + std::to_string(q) + ", k=" + std::to_string(k));
                }
              }
            });

  const std::string canrep_path = argc > 1 ? argv[1] : "";
  criterion("AC8", "two runs of verify --q 9 --seed 7 are byte-identical", 60.0,
            [&](Outcome& o) {
              app::RunConfig c;
              c.q = 9;
              c.policy.seed = 7;
              const auto f = app::resolve_field(c);
              const auto a = app::render_json(app::run_verify(f, c).report);
              const auto b = app::render_json(app::run_verify(f, c).report);
              if (a != b) o.fail("library reports differ");
              if (canrep_path.empty()) return;
              for (const char* out : {"acceptance_q9_a.json", "acceptance_q9_b.json"}) {
                const std::string cmd =
                    "\"" + canrep_path + "\" verify --q 9 --seed 7 --out " + out;
                if (std::system(cmd.c_str()) != 0) o.fail("canrep verify did not exit 0");
              }
              const auto fa = read_file("acceptance_q9_a.json");
              const auto fb = read_file("acceptance_q9_b.json");
              if (fa.empty() || fa != fb) o.fail("CLI reports differ");
              if (fa != a) o.fail("CLI report differs from the library report");
              std::remove("acceptance_q9_a.json");
              std::remove("acceptance_q9_b.json");
            });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
