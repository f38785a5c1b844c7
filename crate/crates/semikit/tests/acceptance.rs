//! End-to-end acceptance checks for the whole workspace. Every test prints
//! exactly one summary line of the form
//!
//! ```text
//! acceptance N (<name>): pass [<elapsed>]
//! ```
//!
//! (or `fail — <reason>`), then panics on failure so the harness records it.
//! Run with `--nocapture` to see the lines for passing tests too.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semikit::app;
use semikit::formats::write_rees;
use semikit_core::bruteforce::{all_partitions, congruences_by_filter};
use semikit_core::*;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn s(e: impl core::fmt::Display) -> String {
    e.to_string()
}

/// Runs one criterion, prints its single pass/fail line, and enforces the
/// wall-clock budget.
fn conclude(
    number: usize,
    name: &str,
    limit: Duration,
    body: impl FnOnce() -> Result<String, String>,
) {
    let started = Instant::now();
    let outcome = body();
    let elapsed = started.elapsed();
    let outcome = outcome.and_then(|detail| {
        if elapsed <= limit {
            Ok(detail)
        } else {
            Err(format!("time budget {limit:?} exceeded: took {elapsed:?}"))
        }
    });
    match outcome {
        Ok(detail) if detail.is_empty() => {
            println!("acceptance {number} ({name}): pass [{elapsed:.2?}]");
        }
        Ok(detail) => {
            println!("acceptance {number} ({name}): pass [{elapsed:.2?}] — {detail}");
        }
        Err(reason) => {
            println!("acceptance {number} ({name}): fail — {reason}");
            panic!("acceptance {number} ({name}) failed: {reason}");
        }
    }
}

#[test]
fn acceptance_1_golden_suite() {
    conclude(1, "golden suite on the 8-element example", Duration::from_secs(10), || {
        let spec = s2();
        let alg = rees_matrix(&spec);
        let e = spec.group().identity();
        let g = 1 - e; // the non-identity element of the order-2 group
        ensure!(alg.is_regular(), "expected a regular semigroup");
        ensure!(alg.is_completely_simple(), "expected completely simple");
        ensure!(!alg.is_orthodox(), "expected a non-orthodox semigroup");
        // the witness pair is the idempotents at positions (1,1) and (2,2)
        // of the sandwich matrix: (1,e,1) and (2,g,2) in 1-based coordinates
        let Err(StructureError::NotOrthodox { first, second }) = orthodox_cs_decomposition(&alg)
        else {
            return Err("expected an explicit non-orthodox witness pair".into());
        };
        ensure!(
            first == spec.encode(0, e, 0) && second == spec.encode(1, g, 1),
            "unexpected witness pair ({first}, {second})"
        );
        let product = alg.mul(first, second);
        ensure!(product == spec.encode(0, g, 1), "witness product is {product}");
        let square = alg.mul(product, product);
        ensure!(
            square == spec.encode(0, e, 1) && square != product,
            "witness product should differ from its square"
        );
        ensure!(!is_abelian(&alg).map_err(s)?, "expected a non-abelian semigroup");
        let one = Congruence::one(&alg);
        let rho = commutator(&alg, &[&one, &one]).map_err(s)?;
        let blocks: Vec<Vec<usize>> = [(0, 0), (0, 1), (1, 0), (1, 1)]
            .iter()
            .map(|&(i, l)| vec![spec.encode(i, e, l), spec.encode(i, g, l)])
            .collect();
        let expected =
            Congruence::new(&alg, Partition::from_blocks(8, &blocks).map_err(s)?).map_err(s)?;
        ensure!(rho == expected, "[1,1] is {}", rho.partition());
        // the linked triple of [1,1]: singleton row/column classes, the
        // whole order-2 group as the normal subgroup
        let triple = linked_triple(&spec, &rho).map_err(s)?;
        ensure!(
            triple.i_classes == Partition::zero(2) && triple.lambda_classes == Partition::zero(2),
            "row/column classes of [1,1] should be singletons"
        );
        ensure!(
            triple.group_normal == vec![0, 1],
            "the normal subgroup of [1,1] should be the whole group"
        );
        ensure!(
            commutator(&alg, &[&one, &rho]).map_err(s)?.is_zero(),
            "[1, [1,1]] should vanish"
        );
        ensure!(
            commutator(&alg, &[&one, &one, &one]).map_err(s)?.is_zero(),
            "the ternary commutator [1,1,1] should vanish"
        );
        let lc = lower_central_series(&alg).map_err(s)?;
        let der = derived_series(&alg).map_err(s)?;
        let sup = supernilpotency_degree(&alg, 3).map_err(s)?;
        ensure!(lc.degree() == Some(2), "nilpotency degree is {:?}", lc.degree());
        ensure!(der.degree() == Some(2), "solvability degree is {:?}", der.degree());
        ensure!(sup.degree() == Some(2), "supernilpotency degree is {:?}", sup.degree());
        ensure!(alg.is_idempotent_antichain(), "idempotents should form an antichain");
        Ok(String::new())
    });
}

#[test]
fn acceptance_2_congruence_lattice_vs_partition_oracle() {
    conclude(2, "congruence lattice vs 4140-partition oracle", Duration::from_secs(30), || {
        let spec = s2();
        let alg = rees_matrix(&spec);
        ensure!(
            all_partitions(8).len() == 4140,
            "an 8-element set has 4140 partitions"
        );
        let oracle: BTreeSet<String> = congruences_by_filter(&alg)
            .iter()
            .map(|p| p.to_string())
            .collect();
        let lattice = all_congruences(&alg, DEFAULT_LATTICE_CAP).map_err(s)?;
        let engine: BTreeSet<String> = lattice
            .members()
            .iter()
            .map(|c| c.partition().to_string())
            .collect();
        ensure!(lattice.len() == 5, "expected 5 congruences, found {}", lattice.len());
        ensure!(engine == oracle, "lattice disagrees with the brute-force filter");
        for member in lattice.members() {
            ensure!(
                verify_cong_product(&spec, member).map_err(s)?,
                "congruence {} does not round-trip through its linked triple",
                member.partition()
            );
        }
        Ok(format!("{} lattice members verified two ways", lattice.len()))
    });
}

#[test]
fn acceptance_3_centralizes_vs_word_oracle() {
    conclude(3, "cube engine vs word oracle on orders 2-3", Duration::from_secs(300), || {
        let params = WordOracleParams::default(); // word length 6, block arity 2
        let mut compared = 0usize;
        for (order, classes) in [(2usize, 5usize), (3, 24)] {
            let members = enumerate_semigroups(order, CorpusFilter::All).map_err(s)?;
            ensure!(
                members.len() == classes,
                "expected {classes} classes of order {order}, found {}",
                members.len()
            );
            for (index, alg) in members.iter().enumerate() {
                let lattice = all_congruences(alg, DEFAULT_LATTICE_CAP).map_err(s)?;
                let zero = Congruence::zero(alg);
                for a in lattice.members() {
                    for b in lattice.members() {
                        let engine = centralizes(alg, &[a, b], &zero).map_err(s)?;
                        let oracle =
                            oracle_centralizes_by_words(alg, &[a, b], &zero, &params).map_err(s)?;
                        ensure!(
                            engine.holds() == oracle.holds(),
                            "disagreement on algebra {index} of order {order} at ({}, {}): engine {}, oracle {}",
                            a.partition(),
                            b.partition(),
                            engine.holds(),
                            oracle.holds()
                        );
                        compared += 1;
                    }
                }
            }
        }
        Ok(format!("{compared} congruence pairs compared"))
    });
}

#[test]
fn acceptance_4_theorem_suite_over_small_corpus() {
    conclude(4, "theorem suite over the order <= 4 corpus", Duration::from_secs(1800), || {
        let mut corpus: Vec<(String, FiniteSemigroup)> = Vec::new();
        for order in 1..=4usize {
            let members = enumerate_semigroups(order, CorpusFilter::All).map_err(s)?;
            for (index, alg) in members.into_iter().enumerate() {
                corpus.push((format!("n{order}-{index:03}+0"), adjoin_zero(&alg)));
                corpus.push((format!("n{order}-{index:03}"), alg));
            }
        }
        ensure!(corpus.len() == 436, "expected 436 corpus entries, found {}", corpus.len());
        let report = verify_theorem_suite(&corpus, &SuiteBudget::default());
        ensure!(report.sound(), "suite reported failures");
        let failures = report.failures();
        ensure!(
            failures.is_empty(),
            "{} counterexamples; first: {} / {}",
            failures.len(),
            failures[0].algebra,
            failures[0].check
        );
        Ok(format!(
            "{} algebras, {} checks: {} pass, {} vacuous, {} skipped",
            corpus.len(),
            report.checks().len(),
            report.count(CheckStatus::Pass),
            report.count(CheckStatus::Vacuous),
            report.count(CheckStatus::Skipped)
        ))
    });
}

#[test]
fn acceptance_5_rees_and_product_identities() {
    conclude(5, "Rees/product identities on 50 random specs", Duration::from_secs(600), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        let groups: Vec<GroupSpec> = vec![
            cyclic_group(1),
            cyclic_group(2),
            cyclic_group(3),
            cyclic_group(4),
            builtin_group("c2xc2").map_err(s)?,
        ];
        let combos_a: [[usize; 3]; 4] = [[1, 1, 1], [1, 0, 0], [0, 1, 1], [0, 0, 0]];
        let combos_b: [[usize; 3]; 2] = [[1, 1, 1], [0, 0, 1]];
        for case in 0..50usize {
            let group = groups[rng.gen_range(0..groups.len())].clone();
            let rows = rng.gen_range(1..=3usize);
            let cols = rng.gen_range(1..=3usize);
            let e = group.identity();
            let mut sandwich = vec![e; cols * rows];
            for l in 1..cols {
                for i in 1..rows {
                    sandwich[l * rows + i] = rng.gen_range(0..group.order());
                }
            }
            let spec = ReesSpec::new(group.clone(), rows, cols, sandwich).map_err(s)?;
            let alg = rees_matrix(&spec);

            // every congruence factors through its linked triple
            let lattice = all_congruences(&alg, DEFAULT_LATTICE_CAP).map_err(s)?;
            for member in lattice.members() {
                ensure!(
                    verify_cong_product(&spec, member).map_err(s)?,
                    "case {case}: congruence {} does not factor",
                    member.partition()
                );
            }

            // commutators on group x left-zero x right-zero are componentwise
            let lz = left_zero(rows);
            let rz = right_zero(cols);
            let product = DirectProduct::new(&[group.underlying(), &lz, &rz]);
            let factors = product.factors();
            let pick = |t: usize, bit: usize| {
                if bit == 0 {
                    Congruence::zero(&factors[t])
                } else {
                    Congruence::one(&factors[t])
                }
            };
            for ca in combos_a {
                for cb in combos_b {
                    let aparts: Vec<Congruence> = (0..3).map(|t| pick(t, ca[t])).collect();
                    let bparts: Vec<Congruence> = (0..3).map(|t| pick(t, cb[t])).collect();
                    let alpha =
                        product_congruence(&product, &aparts.iter().collect::<Vec<_>>())
                            .map_err(s)?;
                    let beta = product_congruence(&product, &bparts.iter().collect::<Vec<_>>())
                        .map_err(s)?;
                    let joint = commutator(product.algebra(), &[&alpha, &beta]).map_err(s)?;
                    let componentwise: Vec<Congruence> = (0..3)
                        .map(|t| commutator(&factors[t], &[&aparts[t], &bparts[t]]))
                        .collect::<Result<_, _>>()
                        .map_err(s)?;
                    let assembled =
                        product_congruence(&product, &componentwise.iter().collect::<Vec<_>>())
                            .map_err(s)?;
                    ensure!(
                        joint == assembled,
                        "case {case}: product commutator is not componentwise at {ca:?}/{cb:?}"
                    );
                }
            }

            // group x rectangular band is the identity-sandwich algebra
            let band = rectangular_band(rows, cols);
            let with_band = DirectProduct::new(&[group.underlying(), &band]);
            let identity_spec =
                ReesSpec::new(group.clone(), rows, cols, vec![e; cols * rows]).map_err(s)?;
            ensure!(
                find_isomorphism(with_band.algebra(), &rees_matrix(&identity_spec)).is_some(),
                "case {case}: group x rectangular band should match the identity sandwich"
            );

            // coordinatization round trip recovers the dimensions
            let (recovered, witness) = rees_coordinatize(&alg).map_err(s)?;
            ensure!(
                recovered.group().order() == group.order()
                    && recovered.i_size() == rows
                    && recovered.lambda_size() == cols,
                "case {case}: coordinatization recovered {}x{} over a group of order {}",
                recovered.i_size(),
                recovered.lambda_size(),
                recovered.group().order()
            );
            ensure!(
                witness.map().len() == alg.order(),
                "case {case}: coordinatization witness has the wrong size"
            );
        }
        Ok("50 random specs checked".into())
    });
}

#[test]
fn acceptance_6_group_degree_equivalence() {
    conclude(6, "group supernilpotency vs nilpotency class", Duration::from_secs(300), || {
        let cases: Vec<(&str, GroupSpec, Option<usize>)> = vec![
            ("c2", cyclic_group(2), Some(1)),
            ("c4", cyclic_group(4), Some(1)),
            ("c2xc2", builtin_group("c2xc2").map_err(s)?, Some(1)),
            ("s3", builtin_group("s3").map_err(s)?, None),
            ("d4", builtin_group("d4").map_err(s)?, Some(2)),
            ("q8", builtin_group("q8").map_err(s)?, Some(2)),
        ];
        for (name, group, class_expected) in &cases {
            let class = group_nilpotency_class(group);
            ensure!(class == *class_expected, "{name}: nilpotency class is {class:?}");
            let sup = supernilpotency_degree(group.underlying(), 3).map_err(s)?;
            match class {
                Some(c) => ensure!(
                    sup.degree() == Some(c),
                    "{name}: supernilpotency degree {:?} but class {c}",
                    sup.degree()
                ),
                None => ensure!(
                    sup.degree().is_none(),
                    "{name}: degree {:?} for a non-nilpotent group",
                    sup.degree()
                ),
            }
        }
        // the 6-element symmetric group: binary and ternary commutators both
        // give the congruence modulo its 3-element rotation subgroup
        let s3 = builtin_group("s3").map_err(s)?;
        let alg = s3.underlying();
        let one = Congruence::one(alg);
        let binary = commutator(alg, &[&one, &one]).map_err(s)?;
        let ternary = commutator(alg, &[&one, &one, &one]).map_err(s)?;
        ensure!(binary == ternary, "binary and ternary commutators should agree");
        let rotations: BTreeSet<usize> = (0..6).map(|x| s3.mul(x, x)).collect();
        ensure!(
            rotations.len() == 3 && rotations.contains(&s3.identity()),
            "squares should form the rotation subgroup"
        );
        let rest: Vec<usize> = (0..6).filter(|x| !rotations.contains(x)).collect();
        let modulo = Congruence::new(
            alg,
            Partition::from_blocks(6, &[rotations.iter().copied().collect(), rest]).map_err(s)?,
        )
        .map_err(s)?;
        ensure!(binary == modulo, "commutator is {}", binary.partition());
        Ok("ternary probes on the two 8-element groups use the dense 8^8 = 16777216 cube bound \
            (heavy profile)"
            .into())
    });
}

#[test]
fn acceptance_7_orthodox_equivalences() {
    conclude(7, "orthodox equivalences and inverse collapse", Duration::from_secs(1800), || {
        let mut family: Vec<(String, FiniteSemigroup)> = Vec::new();
        for order in 1..=4usize {
            let members = enumerate_semigroups(order, CorpusFilter::Orthodox).map_err(s)?;
            for (index, alg) in members.into_iter().enumerate() {
                family.push((format!("orthodox-n{order}-{index:03}"), alg));
            }
        }
        let corpus_members = family.len();
        let groups: Vec<(&str, GroupSpec)> = vec![
            ("c2", cyclic_group(2)),
            ("c3", cyclic_group(3)),
            ("c4", cyclic_group(4)),
            ("c2xc2", builtin_group("c2xc2").map_err(s)?),
            ("d4", builtin_group("d4").map_err(s)?),
            ("q8", builtin_group("q8").map_err(s)?),
        ];
        let bands: Vec<(&str, FiniteSemigroup)> = vec![
            ("trivial", trivial()),
            ("lz2", left_zero(2)),
            ("rz2", right_zero(2)),
            ("rb22", rectangular_band(2, 2)),
            ("sl2", adjoin_zero(&trivial())),
        ];
        for (gname, group) in &groups {
            for (bname, band) in &bands {
                let alg = DirectProduct::new(&[group.underlying(), band]).into_algebra();
                family.push((format!("{gname}x{bname}"), alg));
            }
        }
        // products with 32 elements keep their binary series but skip the
        // per-tuple lattice sweeps and arity-3 probes
        let budget = SuiteBudget {
            arity3_order_cap: 8,
            tuple_cap: 256,
            ..SuiteBudget::default()
        };
        let report = verify_theorem_suite(&family, &budget);
        ensure!(report.sound(), "suite reported failures");
        let failures = report.failures();
        ensure!(
            failures.is_empty(),
            "{} counterexamples; first: {} / {}",
            failures.len(),
            failures[0].algebra,
            failures[0].check
        );

        // a budget-starved probe must come back skipped, never passed
        let starved = SuiteBudget {
            max_arity: 2,
            ..SuiteBudget::default()
        };
        let d4_only = [(
            "d4".to_string(),
            builtin_group("d4").map_err(s)?.into_underlying(),
        )];
        let starved_report = verify_theorem_suite(&d4_only, &starved);
        let group_check = starved_report
            .checks()
            .iter()
            .find(|c| c.check == "group-supernilpotency-equals-nilpotency-class")
            .ok_or("missing group check in the starved run")?;
        ensure!(
            group_check.status == CheckStatus::Skipped,
            "budget-starved probe reported {} instead of skipped",
            group_check.status.name()
        );

        // inverse members: a supernilpotent decomposition exists exactly for
        // groups, and then both band dimensions collapse to 1
        for (gname, group) in &groups {
            let class = group_nilpotency_class(group);
            if group.order() > 4 {
                continue; // keep the arity-3 probes to the small groups here
            }
            let d = inverse_supernilpotent_decomposition(group.underlying(), 3).map_err(s)?;
            match class {
                Some(_) => {
                    let d = d.ok_or_else(|| format!("{gname}: expected a decomposition"))?;
                    ensure!(
                        d.left_size() == 1 && d.right_size() == 1,
                        "{gname}: band factor should be trivial"
                    );
                    ensure!(
                        d.group().order() == group.order(),
                        "{gname}: group factor should be the whole group"
                    );
                }
                None => ensure!(d.is_none(), "{gname}: unexpected decomposition"),
            }
        }
        let with_semilattice =
            DirectProduct::new(&[cyclic_group(2).underlying(), &adjoin_zero(&trivial())])
                .into_algebra();
        ensure!(
            with_semilattice.is_inverse_semigroup(),
            "a group times a semilattice should be inverse"
        );
        ensure!(
            inverse_supernilpotent_decomposition(&with_semilattice, 3)
                .map_err(s)?
                .is_none(),
            "an inverse member with a genuine semilattice part must not decompose"
        );
        Ok(format!(
            "{} corpus members + {} constructed products; {} checks, {} skipped",
            corpus_members,
            family.len() - corpus_members,
            report.checks().len(),
            report.count(CheckStatus::Skipped)
        ))
    });
}

#[test]
fn acceptance_8_determinism() {
    conclude(8, "byte-identical structured outputs", Duration::from_secs(900), || {
        let dir = std::env::temp_dir().join("semikit-acceptance-determinism");
        std::fs::create_dir_all(&dir).map_err(s)?;
        let rees_path = dir.join("example.json");
        std::fs::write(&rees_path, write_rees(&s2())).map_err(s)?;
        let rees_arg = format!("rees:{}", rees_path.display());
        let invocations: Vec<Vec<&str>> = vec![
            vec!["props", "builtin:s2"],
            vec!["props", rees_arg.as_str()],
            vec!["congruences", "builtin:s2"],
            vec!["commutator", "builtin:s2", "--arity", "3"],
            vec!["centralize", "builtin:s2", "--delta", "{0,2|1,3|4,6|5,7}"],
            vec!["degrees", "builtin:s2"],
            vec!["degrees", "builtin:d4"],
            vec!["decompose", "builtin:q8", "--kind", "inverse"],
            vec!["decompose", "builtin:left_zero_3", "--kind", "warne"],
            vec!["enumerate", "--order", "3"],
            vec!["verify-theorems", "--max-order", "3", "--with-adjoin-zero"],
        ];
        let run_once = |argv: &[&str]| -> Result<String, String> {
            let mut full: Vec<&str> = vec!["semikit"];
            full.extend_from_slice(argv);
            full.extend_from_slice(&["--format", "structured"]);
            let out = app::run(&full);
            if out.code != 0 {
                return Err(format!("{argv:?} exited {}: {}", out.code, out.stderr));
            }
            Ok(out.stdout)
        };
        for argv in &invocations {
            let first = run_once(argv)?;
            let second = run_once(argv)?;
            ensure!(first == second, "repeated run of {argv:?} differs");
        }
        // worker counts must not change a single byte
        let base = run_once(&["commutator", "builtin:s2", "--arity", "3", "--workers", "1"])?;
        for workers in ["2", "4", "7"] {
            let alt = run_once(&[
                "commutator",
                "builtin:s2",
                "--arity",
                "3",
                "--workers",
                workers,
            ])?;
            ensure!(base == alt, "worker count {workers} changed the commutator output");
        }
        let degrees_base = run_once(&["degrees", "builtin:d4", "--workers", "1"])?;
        let degrees_alt = run_once(&["degrees", "builtin:d4", "--workers", "3"])?;
        ensure!(degrees_base == degrees_alt, "worker count changed the degrees output");
        Ok(format!(
            "{} invocations re-run byte-identically, plus worker-count variations",
            invocations.len()
        ))
    });
}
