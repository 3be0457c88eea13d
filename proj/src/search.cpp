#include "nearness/search.hpp"

#include <array>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "nearness/errors.hpp"
#include "nearness/feature_system.hpp"
#include "nearness/object_set.hpp"

namespace nearness::io {

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

using Cells = std::array<std::uint8_t, 25>;  // up to 5x5 tables

struct Table {
    const std::uint8_t* c;
    std::size_t n;
    std::size_t at(std::size_t x, std::size_t y) const { return c[x * n + y]; }
};

// ---- verdict kernels -------------------------------------------------------
// These mirror the pass/fail semantics of the report-building checkers
// (structures::check_near_group(...).passed() etc.); the agreement is pinned
// by tests.

bool ng_clean(Table op, ObjectSet g, ObjectSet u, bool* abelian_out = nullptr) {
    bool ok = true;
    g.for_each([&](std::size_t x) {
        g.for_each([&](std::size_t y) {
            if (!u.contains(op.at(x, y))) ok = false;
        });
    });
    if (!ok) return false;
    g.for_each([&](std::size_t x) {
        g.for_each([&](std::size_t y) {
            const std::size_t xy = op.at(x, y);
            g.for_each([&](std::size_t z) {
                const std::size_t l = op.at(xy, z);
                const std::size_t r = op.at(x, op.at(y, z));
                if (l != r || !u.contains(l) || !u.contains(r)) ok = false;
            });
        });
    });
    if (!ok) return false;

    int identity = -1;
    int identity_count = 0;
    u.for_each([&](std::size_t e) {
        bool acts = true;
        g.for_each([&](std::size_t x) {
            if (op.at(x, e) != x || op.at(e, x) != x) acts = false;
        });
        if (acts) {
            ++identity_count;
            if (identity < 0) identity = static_cast<int>(e);
        }
    });
    if (identity_count != 1) return false;  // absent, or non-unique (anomaly)

    const std::size_t e = static_cast<std::size_t>(identity);
    g.for_each([&](std::size_t x) {
        int inverses = 0;
        g.for_each([&](std::size_t y) {
            if (op.at(x, y) == e && op.at(y, x) == e) ++inverses;
        });
        if (inverses != 1) ok = false;
    });
    if (!ok) return false;

    if (abelian_out != nullptr) {
        bool ab = true;
        g.for_each([&](std::size_t x) {
            g.for_each([&](std::size_t y) {
                if (op.at(x, y) != op.at(y, x)) ab = false;
            });
        });
        *abelian_out = ab;
    }
    return true;
}

bool ns_pass(Table op, ObjectSet g, ObjectSet u) {
    bool ok = true;
    g.for_each([&](std::size_t x) {
        g.for_each([&](std::size_t y) {
            if (!u.contains(op.at(x, y))) ok = false;
        });
    });
    if (!ok) return false;
    g.for_each([&](std::size_t x) {
        g.for_each([&](std::size_t y) {
            const std::size_t xy = op.at(x, y);
            g.for_each([&](std::size_t z) {
                const std::size_t l = op.at(xy, z);
                const std::size_t r = op.at(x, op.at(y, z));
                if (l != r || !u.contains(l) || !u.contains(r)) ok = false;
            });
        });
    });
    return ok;
}

// Assumes the additive near-group and multiplicative near-semigroup checks
// already passed, so first-level sums/products of carrier pairs are in u.
bool nr3_pass(Table add, Table mul, ObjectSet g, ObjectSet u) {
    bool ok = true;
    g.for_each([&](std::size_t x) {
        g.for_each([&](std::size_t y) {
            g.for_each([&](std::size_t z) {
                const std::size_t ll = mul.at(x, add.at(y, z));
                const std::size_t lr = add.at(mul.at(x, y), mul.at(x, z));
                if (ll != lr || !u.contains(ll) || !u.contains(lr)) ok = false;
                const std::size_t rl = mul.at(add.at(x, y), z);
                const std::size_t rr = add.at(mul.at(x, z), mul.at(y, z));
                if (rl != rr || !u.contains(rl) || !u.contains(rr)) ok = false;
            });
        });
    });
    return ok;
}

bool ring_clean(Table add, Table mul, ObjectSet g, ObjectSet u) {
    bool abelian = false;
    return ng_clean(add, g, u, &abelian) && abelian && ns_pass(mul, g, u) &&
           nr3_pass(add, mul, g, u);
}

// Independent re-derivation of the near-group theorem properties from the
// raw table; returns human-readable violations (expected empty on any clean
// near group).
std::vector<std::string> near_group_theorem_violations(Table op, ObjectSet g, ObjectSet u) {
    std::vector<std::string> out;
    std::vector<std::size_t> identities;
    u.for_each([&](std::size_t e) {
        bool acts = true;
        g.for_each([&](std::size_t x) {
            if (op.at(x, e) != x || op.at(e, x) != x) acts = false;
        });
        if (acts) identities.push_back(e);
    });
    if (identities.size() != 1) {
        out.push_back("identity-uniqueness: " + std::to_string(identities.size()) +
                      " identity elements");
        return out;
    }
    const std::size_t e = identities.front();
    std::vector<int> inv(op.n, -1);
    g.for_each([&](std::size_t x) {
        std::vector<std::size_t> xs;
        g.for_each([&](std::size_t y) {
            if (op.at(x, y) == e && op.at(y, x) == e) xs.push_back(y);
        });
        if (xs.size() != 1) {
            out.push_back("inverse-uniqueness: element " + std::to_string(x) + " has " +
                          std::to_string(xs.size()) + " inverses");
        }
        if (!xs.empty()) inv[x] = static_cast<int>(xs.front());
    });
    g.for_each([&](std::size_t x) {
        if (inv[x] >= 0 && inv[static_cast<std::size_t>(inv[x])] != static_cast<int>(x)) {
            out.push_back("double-inverse: fails at element " + std::to_string(x));
        }
    });
    g.for_each([&](std::size_t x) {
        g.for_each([&](std::size_t y) {
            if (x == y) return;
            g.for_each([&](std::size_t z) {
                if (op.at(x, z) == op.at(y, z) || op.at(z, x) == op.at(z, y)) {
                    out.push_back("cancellation: fails at (" + std::to_string(x) + "," +
                                  std::to_string(y) + "," + std::to_string(z) + ")");
                }
            });
        });
    });
    return out;
}

bool abelian_group_on_all(Table op, std::size_t n) {
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (op.at(x, y) != op.at(y, x)) return false;
        }
    }
    int e = -1;
    for (std::size_t cand = 0; cand < n && e < 0; ++cand) {
        bool acts = true;
        for (std::size_t x = 0; x < n; ++x) {
            if (op.at(x, cand) != x || op.at(cand, x) != x) {
                acts = false;
                break;
            }
        }
        if (acts) e = static_cast<int>(cand);
    }
    if (e < 0) return false;
    for (std::size_t x = 0; x < n; ++x) {
        bool has = false;
        for (std::size_t y = 0; y < n; ++y) {
            if (op.at(x, y) == static_cast<std::size_t>(e)) {
                has = true;
                break;
            }
        }
        if (!has) return false;
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                if (op.at(op.at(x, y), z) != op.at(x, op.at(y, z))) return false;
            }
        }
    }
    return true;
}

bool ordinary_ring(Table add, Table mul, std::size_t n) {
    if (!abelian_group_on_all(add, n)) return false;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                if (mul.at(mul.at(x, y), z) != mul.at(x, mul.at(y, z))) return false;
                if (mul.at(x, add.at(y, z)) != add.at(mul.at(x, y), mul.at(x, z))) return false;
                if (mul.at(add.at(x, y), z) != add.at(mul.at(x, z), mul.at(y, z))) return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<std::uint8_t>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> rgs(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint8_t max_used) -> void {
        if (i == n) {
            out.push_back(rgs);
            return;
        }
        for (std::uint8_t c = 0; c <= max_used + 1 && c < n; ++c) {
            rgs[i] = c;
            self(self, i + 1, std::max<std::uint8_t>(max_used, c));
        }
    };
    rgs[0] = 0;
    rec(rec, 1, 0);
    if (n == 1) out.push_back(rgs);
    return out;
}

std::vector<ObjectSet> partition_classes(const std::vector<std::uint8_t>& rgs) {
    std::size_t k = 0;
    for (std::uint8_t c : rgs) k = std::max<std::size_t>(k, c + 1u);
    std::vector<ObjectSet> classes(k);
    for (std::size_t i = 0; i < rgs.size(); ++i) classes[rgs[i]].insert(i);
    return classes;
}

ObjectSet upper_of(const std::vector<ObjectSet>& classes, ObjectSet g) {
    ObjectSet u;
    for (ObjectSet cls : classes) {
        if (cls.intersects(g)) u |= cls;
    }
    return u;
}

nlohmann::json matrix_json(Table t, const std::vector<std::string>& labels) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t x = 0; x < t.n; ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t y = 0; y < t.n; ++y) row.push_back(labels[t.at(x, y)]);
        rows.push_back(row);
    }
    return rows;
}

// A found structure rendered as a ready-to-verify structure document.
nlohmann::json exemplar_doc(std::size_t n, const std::vector<std::uint8_t>& feature_classes,
                            Table add, Table mul, ObjectSet carrier) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    nlohmann::json doc = nlohmann::json::object();
    doc["objects"] = labels;
    nlohmann::json phi = nlohmann::json::object();
    for (std::size_t i = 0; i < n; ++i) {
        phi[labels[i]] = "v" + std::to_string(feature_classes[i]);
    }
    doc["features"] = nlohmann::json{{"phi", phi}};
    doc["r"] = 1;
    doc["operations"] = nlohmann::json{{"+", matrix_json(add, labels)},
                                       {"*", matrix_json(mul, labels)}};
    nlohmann::json g = nlohmann::json::array();
    carrier.for_each([&](std::size_t i) { g.push_back(labels[i]); });
    doc["subsets"] = nlohmann::json{{"G", g}};
    return doc;
}

struct SigClass {
    std::uint64_t count = 0;
    std::array<int, 2> first{-1, -1};
    void add(int idx) {
        if (first[0] < 0) first[0] = idx;
        else if (first[1] < 0) first[1] = idx;
        ++count;
    }
};

nlohmann::json exhaustive_search(const SearchOptions& opts) {
    const std::size_t n = opts.size;
    const std::size_t nn = n * n;
    std::size_t table_count = 1;
    for (std::size_t i = 0; i < nn; ++i) table_count *= n;

    std::vector<Cells> tables(table_count);
    for (std::size_t t = 0; t < table_count; ++t) {
        std::size_t v = t;
        for (std::size_t i = 0; i < nn; ++i) {
            tables[t][i] = static_cast<std::uint8_t>(v % n);
            v /= n;
        }
    }
    auto tb = [&](std::size_t t) { return Table{tables[t].data(), n}; };

    const auto partitions = set_partitions(n);
    std::vector<std::vector<ObjectSet>> classes_of;
    for (const auto& p : partitions) classes_of.push_back(partition_classes(p));

    const std::size_t subset_count = (std::size_t{1} << n) - 2;
    std::vector<std::vector<ObjectSet>> upper(partitions.size());
    for (std::size_t p = 0; p < partitions.size(); ++p) {
        upper[p].resize(subset_count + 1);
        for (std::size_t g = 1; g <= subset_count; ++g) {
            upper[p][g] = upper_of(classes_of[p], ObjectSet::from_bits(g));
        }
    }

    // Ordinary rings on the whole universe, independent of features.
    std::vector<char> is_group(table_count, 0);
    std::vector<std::size_t> group_adds;
    for (std::size_t t = 0; t < table_count; ++t) {
        if (abelian_group_on_all(tb(t), n)) {
            is_group[t] = 1;
            group_adds.push_back(t);
        }
    }
    std::unordered_set<std::uint64_t> ring_pairs;
    std::vector<std::pair<std::size_t, std::size_t>> ring_pair_list;
    for (std::size_t a : group_adds) {
        for (std::size_t m = 0; m < table_count; ++m) {
            if (ordinary_ring(tb(a), tb(m), n)) {
                ring_pairs.insert(static_cast<std::uint64_t>(a) * table_count + m);
                ring_pair_list.emplace_back(a, m);
            }
        }
    }

    // Single-table scan: near groups (with the theorem suite) and the
    // additive/multiplicative pass sets for the ring phase. Singleton
    // carriers are bucketed by the table region the ring verdict reads
    // (add diagonal; mul row+column of the carrier element), so the pair
    // count aggregates exactly without enumerating all table pairs.
    std::uint64_t ng_found = 0;
    nlohmann::json violations = nlohmann::json::array();
    std::vector<std::vector<std::map<std::uint32_t, SigClass>>> add_sigs(
        partitions.size(), std::vector<std::map<std::uint32_t, SigClass>>(subset_count + 1));
    auto mul_sigs = add_sigs;
    std::vector<std::vector<std::vector<int>>> add_lists(
        partitions.size(), std::vector<std::vector<int>>(subset_count + 1));
    auto mul_lists = add_lists;

    for (std::size_t t = 0; t < table_count; ++t) {
        const Table table = tb(t);
        for (std::size_t p = 0; p < partitions.size(); ++p) {
            for (std::size_t g = 1; g <= subset_count; ++g) {
                const ObjectSet carrier = ObjectSet::from_bits(g);
                const ObjectSet u = upper[p][g];
                bool abelian = false;
                const bool ng = ng_clean(table, carrier, u, &abelian);
                if (ng) {
                    ++ng_found;
                    for (const auto& v : near_group_theorem_violations(table, carrier, u)) {
                        violations.push_back(nlohmann::json{{"partition", p},
                                                            {"table", t},
                                                            {"carrier_bits", g},
                                                            {"violation", v}});
                    }
                }
                const bool nr1 = ng && abelian;
                const bool ns = ns_pass(table, carrier, u);
                if (carrier.size() == 1) {
                    const std::size_t a = carrier.first();
                    if (nr1) {
                        std::uint32_t sig = 0;
                        for (std::size_t j = n; j-- > 0;) {
                            sig = sig * static_cast<std::uint32_t>(n) +
                                  static_cast<std::uint32_t>(table.at(j, j));
                        }
                        add_sigs[p][g][sig].add(static_cast<int>(t));
                    }
                    if (ns) {
                        std::uint32_t sig = 0;
                        for (std::size_t j = n; j-- > 0;) {
                            sig = sig * static_cast<std::uint32_t>(n) +
                                  static_cast<std::uint32_t>(table.at(j, a));
                        }
                        for (std::size_t j = n; j-- > 0;) {
                            sig = sig * static_cast<std::uint32_t>(n) +
                                  static_cast<std::uint32_t>(table.at(a, j));
                        }
                        mul_sigs[p][g][sig].add(static_cast<int>(t));
                    }
                } else {
                    if (nr1) add_lists[p][g].push_back(static_cast<int>(t));
                    if (ns) mul_lists[p][g].push_back(static_cast<int>(t));
                }
            }
        }
    }

    std::uint64_t ring_found = 0;
    nlohmann::json exemplars = nlohmann::json::array();
    auto try_exemplar = [&](std::size_t p, std::size_t g, std::size_t a, std::size_t m) {
        if (exemplars.size() >= opts.max_exemplars) return;
        if (ring_pairs.count(static_cast<std::uint64_t>(a) * table_count + m)) return;
        exemplars.push_back(
            exemplar_doc(n, partitions[p], tb(a), tb(m), ObjectSet::from_bits(g)));
    };

    for (std::size_t p = 0; p < partitions.size(); ++p) {
        for (std::size_t g = 1; g <= subset_count; ++g) {
            const ObjectSet carrier = ObjectSet::from_bits(g);
            const ObjectSet u = upper[p][g];
            if (carrier.size() == 1) {
                const std::size_t a = carrier.first();
                for (const auto& [asig, ainfo] : add_sigs[p][g]) {
                    std::array<std::uint8_t, 5> diag{};
                    std::uint32_t av = asig;
                    for (std::size_t j = 0; j < n; ++j) {
                        diag[j] = static_cast<std::uint8_t>(av % n);
                        av /= static_cast<std::uint32_t>(n);
                    }
                    for (const auto& [msig, minfo] : mul_sigs[p][g]) {
                        std::array<std::uint8_t, 5> row{}, col{};
                        std::uint32_t mv = msig;
                        for (std::size_t j = 0; j < n; ++j) {
                            row[j] = static_cast<std::uint8_t>(mv % n);
                            mv /= static_cast<std::uint32_t>(n);
                        }
                        for (std::size_t j = 0; j < n; ++j) {
                            col[j] = static_cast<std::uint8_t>(mv % n);
                            mv /= static_cast<std::uint32_t>(n);
                        }
                        const std::size_t s = diag[a];
                        const std::size_t mm = row[a];
                        const std::size_t lhs1 = row[s];
                        const std::size_t rhs = diag[mm];
                        const std::size_t lhs2 = col[s];
                        if (lhs1 == rhs && lhs2 == rhs && u.contains(lhs1) && u.contains(rhs) &&
                            u.contains(lhs2)) {
                            ring_found += ainfo.count * minfo.count;
                            for (int ai : ainfo.first) {
                                for (int mi : minfo.first) {
                                    if (ai >= 0 && mi >= 0) {
                                        try_exemplar(p, g, static_cast<std::size_t>(ai),
                                                     static_cast<std::size_t>(mi));
                                    }
                                }
                            }
                        }
                    }
                }
                // The aggregate count included table pairs that are ordinary
                // rings on O; those are excluded by definition.
                for (const auto& [a_t, m_t] : ring_pair_list) {
                    bool abelian = false;
                    if (ng_clean(tb(a_t), carrier, u, &abelian) && abelian &&
                        ns_pass(tb(m_t), carrier, u) && nr3_pass(tb(a_t), tb(m_t), carrier, u)) {
                        --ring_found;
                    }
                }
            } else {
                for (int a : add_lists[p][g]) {
                    for (int m : mul_lists[p][g]) {
                        if (!nr3_pass(tb(a), tb(m), carrier, u)) continue;
                        if (is_group[a] &&
                            ring_pairs.count(static_cast<std::uint64_t>(a) * table_count + m)) {
                            continue;
                        }
                        ++ring_found;
                        try_exemplar(p, g, static_cast<std::size_t>(a),
                                     static_cast<std::size_t>(m));
                    }
                }
            }
        }
    }

    nlohmann::json out = nlohmann::json::object();
    out["mode"] = "exhaustive";
    out["size"] = n;
    out["seed"] = opts.seed;
    out["space"] = nlohmann::json{{"feature_partitions", partitions.size()},
                                  {"tables_per_operation", table_count},
                                  {"table_pairs", static_cast<std::uint64_t>(table_count) *
                                                      table_count},
                                  {"carriers", subset_count}};
    out["near_groups"] = nlohmann::json{
        {"found", ng_found},
        {"theorem_suite", nlohmann::json{{"checked", ng_found}, {"violations", violations}}}};
    out["nearness_rings"] = nlohmann::json{{"found", ring_found}, {"exemplars", exemplars}};
    return out;
}

nlohmann::json random_search(const SearchOptions& opts) {
    const std::size_t n = opts.size;
    SplitMix64 rng{opts.seed};

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));

    std::uint64_t ng_found = 0, ring_found = 0, ng_checked = 0;
    nlohmann::json violations = nlohmann::json::array();
    nlohmann::json exemplars = nlohmann::json::array();

    for (std::size_t sample = 0; sample < opts.samples; ++sample) {
        const std::size_t probe_count = 1 + rng.below(3);
        FeatureSystem fs;
        fs.universe = Universe::from_ids(labels);
        std::vector<std::uint8_t> first_probe_classes(n, 0);
        for (std::size_t pi = 0; pi < probe_count; ++pi) {
            ProbeFunction probe;
            probe.name = "phi" + std::to_string(pi + 1);
            const std::size_t alphabet = 1 + rng.below(n);
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint8_t v = static_cast<std::uint8_t>(rng.below(alphabet));
                probe.values.push_back("v" + std::to_string(v));
                if (pi == 0) first_probe_classes[i] = v;
            }
            fs.probes.push_back(std::move(probe));
        }
        fs.r = 1 + rng.below(probe_count);
        const NearnessSpace space(std::move(fs));

        Cells add{}, mul{};
        for (std::size_t i = 0; i < n * n; ++i) {
            add[i] = static_cast<std::uint8_t>(rng.below(n));
            mul[i] = static_cast<std::uint8_t>(rng.below(n));
        }
        const Table ta{add.data(), n}, tm{mul.data(), n};
        const bool ordinary = ordinary_ring(ta, tm, n);

        for (std::uint64_t g = 1; g + 1 < (1ull << n); ++g) {
            const ObjectSet carrier = ObjectSet::from_bits(g);
            const ObjectSet u = space.upper_approx(carrier);
            for (const Table* t : {&ta, &tm}) {
                ++ng_checked;
                if (ng_clean(*t, carrier, u)) {
                    ++ng_found;
                    for (const auto& v : near_group_theorem_violations(*t, carrier, u)) {
                        violations.push_back(nlohmann::json{{"sample", sample},
                                                            {"carrier_bits", g},
                                                            {"violation", v}});
                    }
                }
            }
            if (!ordinary && ring_clean(ta, tm, carrier, u)) {
                ++ring_found;
                if (exemplars.size() < opts.max_exemplars) {
                    exemplars.push_back(exemplar_doc(n, first_probe_classes, ta, tm, carrier));
                }
            }
        }
    }

    nlohmann::json out = nlohmann::json::object();
    out["mode"] = "random";
    out["size"] = n;
    out["seed"] = opts.seed;
    out["samples"] = opts.samples;
    out["near_groups"] = nlohmann::json{
        {"found", ng_found},
        {"theorem_suite", nlohmann::json{{"checked", ng_found}, {"violations", violations}}}};
    out["nearness_rings"] = nlohmann::json{{"found", ring_found}, {"exemplars", exemplars}};
    return out;
}

}  // namespace

nlohmann::json search_structures(const SearchOptions& opts) {
    if (opts.size < 2 || opts.size > kMaxSearchSize) {
        throw InputError("search size must lie between 2 and " + std::to_string(kMaxSearchSize));
    }
    if (opts.exhaustive && opts.size > kMaxExhaustiveSize) {
        throw InputError("exhaustive search is bounded to size " +
                         std::to_string(kMaxExhaustiveSize) + "; use random sampling above that");
    }
    if (!opts.exhaustive && opts.samples == 0) {
        throw InputError("random search needs at least one sample");
    }
    return opts.exhaustive ? exhaustive_search(opts) : random_search(opts);
}

}  // namespace nearness::io
