//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! All comparisons are exact; there are no numeric tolerances.

use std::process::{Command, ExitCode};
use std::time::Instant;

use cyclic_quandle::classify::{self, lemma_check, satisfies_f2};
use cyclic_quandle::cyclic::{is_cyclic_type, is_cyclic_type_via_characterization};
use cyclic_quandle::oracle::{self, brute_isomorphism, MAX_BIJECTION_DEGREE};
use cyclic_quandle::quandle::{are_isomorphic, Quandle};
use cyclic_quandle::Permutation;

const BIN: &str = env!("CARGO_BIN_EXE_cyclic-quandle");
const GOLDEN: &str = include_str!("golden/table_12.txt");
const WORKER_COUNTS: [usize; 3] = [1, 2, 8];

/// The published classification for n = 3..=12.
const PUBLISHED: &[(usize, &[&str])] = &[
    (3, &["(1 3)"]),
    (4, &["(1 4 3)"]),
    (5, &["(1 3 5 4)", "(1 4 3 5)"]),
    (6, &[]),
    (7, &["(1 7 4 6 5 3)", "(1 7 5 4 6 3)"]),
    (8, &["(1 5 8 3 7 6 4)", "(1 7 5 4 8 3 6)"]),
    (9, &["(1 4 3 8 6 9 5 7)", "(1 5 7 3 6 4 9 8)"]),
    (10, &[]),
    (
        11,
        &[
            "(1 3 6 8 4 11 5 10 9 7)",
            "(1 4 3 7 10 5 11 9 6 8)",
            "(1 6 8 5 3 9 4 7 11 10)",
            "(1 7 5 4 9 3 10 6 8 11)",
        ],
    ),
    (12, &[]),
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(text: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(text, n).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn members(n: usize) -> Vec<Permutation> {
    classify::enumerate_fn_with(n, 1)
        .expect("enumerate")
        .members
}

fn run_bin(args: &[&str]) -> Result<String, String> {
    let out = Command::new(BIN)
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited with {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn table_output(workers: usize) -> Result<String, String> {
    run_bin(&["table", "--max-n", "12", "--workers", &workers.to_string()])
}

fn oracle_output(workers: usize) -> Result<String, String> {
    let mut all = String::new();
    for n in 3..=6 {
        all.push_str(&run_bin(&[
            "oracle",
            "--n",
            &n.to_string(),
            "--workers",
            &workers.to_string(),
        ])?);
    }
    Ok(all)
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let text = table_output(1)?;
    let serial = start.elapsed();
    ensure(text == GOLDEN, || {
        format!("table differs from golden file:\n{text}")
    })?;
    let rows = classify::classification_table_with(3, 12, 1).map_err(|e| e.to_string())?;
    for (row, (n, expected)) in rows.iter().zip(PUBLISHED) {
        ensure(row.n == *n && row.member_strings() == *expected, || {
            format!(
                "n={n}: got {:?}, published {:?}",
                row.member_strings(),
                expected
            )
        })?;
    }
    let counts: Vec<usize> = rows.iter().map(|r| r.count()).collect();
    ensure(counts == [1, 1, 2, 0, 2, 2, 2, 0, 4, 0], || {
        format!("counts {counts:?}")
    })?;
    let start = Instant::now();
    table_output(8)?;
    Ok(format!(
        "counts {counts:?}; byte-identical to golden; n<=12 in {:.2}s (1 worker), {:.2}s (8 workers)",
        serial.as_secs_f64(),
        start.elapsed().as_secs_f64()
    ))
}

fn small_cases() -> Outcome {
    let expect = |n: usize, want: &[&str]| -> Result<(), String> {
        let got: Vec<Permutation> = members(n);
        let want: Vec<Permutation> = want.iter().map(|s| p(s, n)).collect();
        ensure(got == want, || format!("F_{n}: {got:?} != {want:?}"))
    };
    expect(3, &["(13)"])?;
    expect(4, &["(143)"])?;
    expect(5, &["(1354)", "(1435)"])?;

    // n = 4: the worked conjugates for (143), and the rejection of (134).
    let s1 = classify::base_cycle(4).map_err(|e| e.to_string())?;
    let s2 = p("(143)", 4);
    let conj = |a: &Permutation, k: i64, b: &Permutation| a.pow(k).conjugate(b).unwrap();
    ensure(conj(&s1, 1, &s2) == p("(124)", 4), || "s1 s2 s1^-1".into())?;
    ensure(conj(&s1, 2, &s2) == p("(132)", 4), || {
        "s1^2 s2 s1^-2".into()
    })?;
    ensure(conj(&s2, 1, &s1) == p("(132)", 4), || "s2 s1 s2^-1".into())?;
    ensure(conj(&s2, 2, &s1) == p("(124)", 4), || {
        "s2^2 s1 s2^-2".into()
    })?;
    let bad = p("(134)", 4);
    ensure(!satisfies_f2(&bad, 4), || "(134) accepted".into())?;
    ensure(conj(&bad, 1, &s1) == p("(124)", 4), || {
        "(134): s2 s1 s2^-1".into()
    })?;
    let mut shifted = vec![conj(&s1, 1, &bad), conj(&s1, 2, &bad)];
    shifted.sort();
    let mut published = vec![p("(142)", 4), p("(123)", 4)];
    published.sort();
    ensure(shifted == published, || {
        format!("(134): shifted set {shifted:?}")
    })?;

    // n = 5: the filter alone rejects the other four, with these conjugates.
    let cases = [
        ("(1345)", 1, "(1452)", "(1245)"),
        ("(1453)", 2, "(1235)", "(1532)"),
        ("(1543)", 3, "(1432)", "(1342)"),
        ("(1534)", 3, "(1423)", "(1324)"),
    ];
    for (s2, m, lhs, rhs) in cases {
        let c = lemma_check(&p(s2, 5), 5).map_err(|e| e.to_string())?;
        ensure(
            c.m == m && c.shifted == p(lhs, 5) && c.swapped == p(rhs, 5) && !c.passes(),
            || format!("{s2}: m={} {} vs {}", c.m, c.shifted, c.swapped),
        )?;
        ensure(!satisfies_f2(&p(s2, 5), 5), || format!("{s2} accepted"))?;
    }
    for s2 in ["(1354)", "(1435)"] {
        ensure(lemma_check(&p(s2, 5), 5).unwrap().passes(), || {
            format!("{s2} filtered out")
        })?;
    }
    Ok(
        "F_3, F_4, F_5 exact; (134) and the four n=5 rejects reproduce the worked conjugates"
            .into(),
    )
}

fn phi_validity() -> Outcome {
    let mut total = 0;
    for n in 3..=12 {
        for s2 in members(n) {
            let q = classify::phi(&s2, n).map_err(|e| format!("n={n} {s2}: {e}"))?;
            // Rebuilding from the translations re-runs the S1/S3 scan.
            Quandle::from_translations(q.translations().to_vec())
                .map_err(|e| format!("n={n} {s2}: {e}"))?;
            ensure(is_cyclic_type(&q) == Ok(true), || {
                format!("n={n} {s2}: not cyclic type")
            })?;
            ensure(q.is_connected(), || format!("n={n} {s2}: not connected"))?;
            ensure(q.is_two_point_homogeneous(), || {
                format!("n={n} {s2}: not two-point homogeneous")
            })?;
            total += 1;
        }
    }
    Ok(format!(
        "{total} quandles valid, cyclic, connected, two-point homogeneous"
    ))
}

fn injectivity() -> Outcome {
    let (mut pairs, mut brute_pairs) = (0, 0);
    for n in 3..=12 {
        let images: Vec<Quandle> = members(n)
            .iter()
            .map(|s2| classify::phi(s2, n).expect("phi"))
            .collect();
        for i in 0..images.len() {
            for j in i + 1..images.len() {
                let fast = are_isomorphic(&images[i], &images[j]);
                ensure(fast.is_none(), || {
                    format!("n={n}: members {i} and {j} isomorphic")
                })?;
                pairs += 1;
                if n <= MAX_BIJECTION_DEGREE {
                    let brute = brute_isomorphism(&images[i], &images[j]);
                    ensure(brute.is_none(), || {
                        format!("n={n}: procedures disagree on {i},{j}")
                    })?;
                    brute_pairs += 1;
                }
            }
            // Sanity: each image is isomorphic to itself under both procedures.
            ensure(are_isomorphic(&images[i], &images[i]).is_some(), || {
                format!("n={n}: self")
            })?;
        }
    }
    Ok(format!(
        "{pairs} pairs non-isomorphic; {brute_pairs} re-confirmed by bijection search"
    ))
}

fn oracle_cross_check() -> Outcome {
    let mut classes = Vec::new();
    for n in 3..=6 {
        let r = oracle::cross_check_with(n, 1).map_err(|e| e.to_string())?;
        ensure(
            r.agreed && r.oracle_classes == r.fn_count && r.matching.len() == r.fn_count,
            || r.to_text(),
        )?;
        classes.push(r.oracle_classes);
    }
    ensure(classes == [1, 1, 2, 0], || format!("classes {classes:?}"))?;
    Ok(format!(
        "classes {classes:?} for n=3..6, matched one-to-one with F_n"
    ))
}

fn known_examples() -> Outcome {
    let tet = Quandle::tetrahedron();
    ensure(tet.is_connected() && tet.is_two_point_homogeneous(), || {
        "tetrahedron".into()
    })?;
    ensure(is_cyclic_type(&tet) == Ok(true), || {
        "tetrahedron not cyclic".into()
    })?;
    ensure(classify::phi(&p("(143)", 4), 4).unwrap() == tet, || {
        "phi((143)) != tetrahedron".into()
    })?;
    for n in 3..=9 {
        let d = Quandle::dihedral(n).unwrap();
        ensure(d.is_connected() == (n % 2 == 1), || {
            format!("dihedral({n}) connectedness")
        })?;
        ensure(is_cyclic_type(&d) == Ok(n == 3), || {
            format!("dihedral({n}) cyclic type")
        })?;
    }
    for n in 1..=9 {
        let t = Quandle::trivial(n).unwrap();
        ensure(t.is_connected() == (n == 1), || {
            format!("trivial({n}) connectedness")
        })?;
        ensure(is_cyclic_type(&t) != Ok(true), || {
            format!("trivial({n}) cyclic type")
        })?;
    }
    Ok("tetrahedron, dihedral(3..9), trivial(1..9) as expected".into())
}

fn characterization() -> Outcome {
    let mut checked = 0;
    let mut agree = |q: &Quandle, what: &str| -> Result<(), String> {
        let a = is_cyclic_type(q).map_err(|e| e.to_string())?;
        let b = is_cyclic_type_via_characterization(q).map_err(|e| e.to_string())?;
        checked += 1;
        ensure(a == b, || format!("{what}: {a} vs {b}"))
    };
    let mut tuples = 0;
    let mut valid = 0;
    for n in 3..=4 {
        for maps in oracle::cyclic_translation_tuples(n) {
            tuples += 1;
            if let Ok(q) = Quandle::from_translations(maps) {
                valid += 1;
                agree(&q, &format!("tuple n={n}"))?;
            }
        }
    }
    ensure(tuples == 1 + 16, || format!("{tuples} tuples"))?;
    agree(&Quandle::tetrahedron(), "tetrahedron")?;
    for n in 3..=12 {
        agree(&Quandle::trivial(n).unwrap(), &format!("trivial({n})"))?;
        agree(&Quandle::dihedral(n).unwrap(), &format!("dihedral({n})"))?;
        for s2 in members(n) {
            agree(&classify::phi(&s2, n).unwrap(), &format!("phi({s2})"))?;
        }
    }
    Ok(format!(
        "{tuples} tuples ({valid} quandles) for n=3,4; {checked} quandles in total agree"
    ))
}

fn conjecture() -> Outcome {
    let r = classify::prime_power_consistency_with(3, 12, 1).map_err(|e| e.to_string())?;
    let nonempty: Vec<usize> = r
        .entries
        .iter()
        .filter(|e| e.nonempty)
        .map(|e| e.n)
        .collect();
    ensure(r.all_consistent, || r.to_text())?;
    ensure(nonempty == [3, 4, 5, 7, 8, 9, 11], || {
        format!("nonempty at {nonempty:?}")
    })?;
    Ok(format!("consistent for n=3..12; nonempty at {nonempty:?}"))
}

fn determinism() -> Outcome {
    let tables: Vec<String> = WORKER_COUNTS
        .iter()
        .map(|&w| table_output(w))
        .collect::<Result<_, _>>()?;
    let oracles: Vec<String> = WORKER_COUNTS
        .iter()
        .map(|&w| oracle_output(w))
        .collect::<Result<_, _>>()?;
    ensure(tables.windows(2).all(|w| w[0] == w[1]), || {
        "table output differs".into()
    })?;
    ensure(oracles.windows(2).all(|w| w[0] == w[1]), || {
        "oracle output differs".into()
    })?;
    ensure(tables[0] == GOLDEN, || {
        "table output differs from golden".into()
    })?;
    Ok(format!(
        "table and oracle output identical at workers {WORKER_COUNTS:?}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table reproduction", table_reproduction),
        ("small cases", small_cases),
        ("phi validity", phi_validity),
        ("injectivity", injectivity),
        ("oracle cross-check", oracle_cross_check),
        ("known examples", known_examples),
        ("characterization equivalence", characterization),
        ("prime-power consistency", conjecture),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
