//! Acceptance suite: one test per criterion, each ending with a single
//! `ACCEPTANCE <k>: PASS` (or `FAIL`) line. The classification criteria
//! shell out to the built CLI binary exactly as a user would.

use classical_chars::classify::ClassificationReport;
use classical_chars::orders::Sign;
use classical_chars::qpoly::QPoly;
use classical_chars::symbols::{enumerate_symbols, Family};
use classical_chars::unipotent::{gl_unipotent_degrees, o_even_unipotent_degrees};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

const BIN: &str = env!("CARGO_BIN_EXE_classical-chars");

fn run_cli(args: &[&str]) -> (bool, String) {
    let out = Command::new(BIN)
        .args(args)
        .output()
        .expect("CLI binary runs");
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    (out.status.success(), stdout)
}

fn classify_json(args: &[&str]) -> ClassificationReport {
    let mut full = args.to_vec();
    full.extend_from_slice(&["--format", "json"]);
    let (ok, stdout) = run_cli(&full);
    assert!(ok, "classify {args:?} failed");
    serde_json::from_str(&stdout).expect("report JSON parses")
}

fn verdict(criterion: u32, ok: bool) {
    println!(
        "ACCEPTANCE {criterion}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion {criterion} failed");
}

type Multiset = BTreeMap<BigInt, u64>;

fn report_multiset(report: &ClassificationReport) -> Multiset {
    let mut ms = Multiset::new();
    for r in &report.records {
        *ms.entry(r.degree_value.clone()).or_default() += r.count;
    }
    ms
}

fn add(ms: &mut Multiset, degree: BigInt, count: u64) {
    if count > 0 {
        *ms.entry(degree).or_default() += count;
    }
}

fn exact(num: BigInt, den: BigInt) -> BigInt {
    assert!((&num % &den).is_zero(), "{num} not divisible by {den}");
    num / den
}

fn diff_lines(got: &Multiset, want: &Multiset) -> String {
    let mut lines = String::new();
    for (d, c) in want {
        if got.get(d) != Some(c) {
            lines.push_str(&format!(
                "  expected {d} x{c}, got x{}\n",
                got.get(d).copied().unwrap_or(0)
            ));
        }
    }
    for (d, c) in got {
        if !want.contains_key(d) {
            lines.push_str(&format!("  unexpected {d} x{c}\n"));
        }
    }
    lines
}

/// The five core characters available over SO_{2n-1}(q) in the starred rows.
fn star_psis(n: u32, q: &BigInt) -> Vec<BigInt> {
    let q1 = q.pow(n - 1);
    vec![
        BigInt::one(),
        exact((&q1 - 1) * (&q1 - q), 2 * (q + 1)),
        exact((&q1 + 1) * (&q1 + q), 2 * (q + 1)),
        exact((&q1 + 1) * (&q1 - q), 2 * (q - 1)),
        exact((&q1 - 1) * (&q1 + q), 2 * (q - 1)),
    ]
}

/// Expected degree multiset for Sp_{2n}(q), q odd, n >= 6: the 14 unipotent
/// degrees plus the non-unipotent families, all with exact counts.
fn expected_symplectic(n: u32, qv: u64) -> Multiset {
    let q = BigInt::from(qv);
    let qn = q.pow(n);
    let q1 = q.pow(n - 1);
    let q2n = q.pow(2 * n);
    let q2n2 = q.pow(2 * n - 2);
    let qsq = &q * &q;
    let a: BigInt = (&q2n2 - 1) * (&q2n - 1);
    let mut ms = Multiset::new();

    // Unipotent characters, one each.
    let unipotent = [
        BigInt::one(),
        exact((&qn - 1) * (&qn - &q), 2 * (&q + 1)),
        exact((&qn + 1) * (&qn + &q), 2 * (&q + 1)),
        exact((&qn + 1) * (&qn - &q), 2 * (&q - 1)),
        exact((&qn - 1) * (&qn + &q), 2 * (&q - 1)),
        exact((&q2n - 1) * ((&q1 - 1) * (&q1 - &qsq)), 2 * (q.pow(4) - 1)),
        exact((&q2n - 1) * ((&q1 + 1) * (&q1 + &qsq)), 2 * (q.pow(4) - 1)),
        exact((&q2n - 1) * ((&q1 + 1) * (&q1 - &qsq)), 2 * (&qsq - 1) * (&qsq - 1)),
        exact((&q2n - 1) * ((&q1 - 1) * (&q1 + &qsq)), 2 * (&qsq - 1) * (&qsq - 1)),
        exact(&q * (&q2n - 1) * (&q2n2 - &qsq), (&qsq - 1) * (&qsq - 1)),
        exact((&q2n - &qsq) * ((&qn - 1) * (&qn - &qsq)), 2 * (q.pow(4) - 1)),
        exact((&q2n - &qsq) * ((&qn + 1) * (&qn + &qsq)), 2 * (q.pow(4) - 1)),
        exact((&q2n - &qsq) * ((&qn + 1) * (&qn - &qsq)), 2 * (&qsq - 1) * (&qsq - 1)),
        exact((&q2n - &qsq) * ((&qn - 1) * (&qn + &qsq)), 2 * (&qsq - 1) * (&qsq - 1)),
    ];
    for d in unipotent {
        add(&mut ms, d, 1);
    }

    // Classes with centralizer SO_{2n-3} x (rank-2 linear part).
    let t1 = (qv - 3) / 2;
    let t2 = (qv - 1) / 2;
    for psi in [BigInt::one(), q.clone()] {
        add(&mut ms, &psi * exact(a.clone(), (&q - 1) * (&qsq - 1)), t1);
        add(&mut ms, &psi * exact(a.clone(), (&q + 1) * (&qsq - 1)), t2);
    }
    add(
        &mut ms,
        exact(a.clone(), &qsq - 1),
        (qv - 1) * (qv - 1) / 4 + (qv - 1) * (qv - 3) / 4,
    );
    add(&mut ms, exact(a.clone(), &qsq + 1), (qv * qv - 1) / 4);
    add(
        &mut ms,
        exact(a.clone(), (&q - 1) * (&q - 1)),
        (qv - 3) * qv.saturating_sub(5) / 8,
    );
    add(&mut ms, exact(a.clone(), (&q + 1) * (&q + 1)), (qv - 1) * (qv - 3) / 8);

    // Classes with centralizer O^±_{2n-2} x (degree-one orbit).
    for alpha in [1i64, -1] {
        let fa = &q1 + alpha;
        add(&mut ms, exact((&q2n - 1) * &fa, 2 * (&q - 1)), qv - 3);
        add(&mut ms, exact((&q2n - 1) * &fa, 2 * (&q + 1)), qv - 1);
    }

    // Classes with centralizer SO_{2n-1} x (degree-one orbit): five core
    // characters each.
    for psi in star_psis(n, &q) {
        add(&mut ms, &psi * exact(&q2n - 1, &q - 1), t1);
        add(&mut ms, &psi * exact(&q2n - 1, &q + 1), t2);
    }

    // Classes with -1 eigenvalues, per orthogonal type.
    for alpha in [1i64, -1] {
        let qma = &q - alpha; // q - alpha
        let q2ma = &qsq - alpha; // q^2 - alpha
        add(&mut ms, exact(a.clone(), 2 * &qma * (&q - 1)), qv - 3);
        add(&mut ms, exact(a.clone(), 2 * &qma * (&q + 1)), qv - 1);
        for psi in star_psis(n, &q) {
            add(&mut ms, &psi * exact(&q2n - 1, 2 * &qma), 2);
        }
        // Full O^alpha_{2n} centralizer: three core characters.
        add(&mut ms, exact(&qn + alpha, BigInt::from(2)), 2);
        add(&mut ms, exact((&q2n - 1) * (&q1 + alpha * &q), 2 * (&qsq - 1)), 2);
        add(&mut ms, exact((&q2n - &qsq) * (&qn + alpha), 2 * (&qsq - 1)), 2);
        // SO_3 x O^alpha_{2n-2}.
        for psi in [BigInt::one(), q.clone()] {
            add(&mut ms, &psi * exact((&q2n - 1) * (&q1 + alpha), 2 * (&qsq - 1)), 2);
        }
        // SO_{2n-3} x O^alpha_4.
        for psi in [BigInt::one(), qsq.clone()] {
            add(&mut ms, &psi * exact(a.clone(), 2 * (&qsq - 1) * &q2ma), 2);
        }
    }
    // SO_{2n-3} x O^+_4 with the fused core character of degree 2q.
    add(
        &mut ms,
        exact(&q * &a, (&qsq - 1) * (&qsq - 1)),
        1,
    );
    ms
}

/// Expected degree multiset for Spin_{2n+1}(q): the seven families.
fn expected_spin_odd(n: u32, qv: u64) -> Multiset {
    let q = BigInt::from(qv);
    let qn = q.pow(n);
    let q2n = q.pow(2 * n);
    let qsq = &q * &q;
    let mut ms = Multiset::new();
    add(&mut ms, BigInt::one(), 1);
    add(&mut ms, exact((&qn - 1) * (&qn - &q), 2 * (&q + 1)), 1);
    add(&mut ms, exact((&qn + 1) * (&qn + &q), 2 * (&q + 1)), 1);
    add(&mut ms, exact((&qn + 1) * (&qn - &q), 2 * (&q - 1)), 1);
    add(&mut ms, exact((&qn - 1) * (&qn + &q), 2 * (&q - 1)), 1);
    add(&mut ms, exact(&q2n - 1, &qsq - 1), 1);
    add(&mut ms, &q * exact(&q2n - 1, &qsq - 1), 1);
    add(&mut ms, exact(&q2n - 1, &q - 1), (qv - 3) / 2);
    add(&mut ms, exact(&q2n - 1, &q + 1), (qv - 1) / 2);
    ms
}

#[test]
fn acceptance_1_symplectic_classification() {
    let mut ok = true;
    for (n, q, total) in [(6u32, 3u64, 81u64), (6, 5, 121), (6, 7, 169), (7, 3, 81)] {
        let started = Instant::now();
        let report = classify_json(&["classify", "Sp", &n.to_string(), &q.to_string()]);
        let elapsed = started.elapsed();
        let got = report_multiset(&report);
        let want = expected_symplectic(n, q);
        if report.total_count() != total || got != want || elapsed > Duration::from_secs(30) {
            eprintln!(
                "Sp(2*{n}, {q}): total {} (want {total}), elapsed {elapsed:?}\n{}",
                report.total_count(),
                diff_lines(&got, &want)
            );
            ok = false;
        }
    }
    verdict(1, ok);
}

#[test]
fn acceptance_2_spin_odd_classification() {
    let mut ok = true;
    for (n, q) in [(5u32, 3u64), (6, 5)] {
        let started = Instant::now();
        let report =
            classify_json(&["classify", "SpinOdd", &n.to_string(), &q.to_string()]);
        let elapsed = started.elapsed();
        let got = report_multiset(&report);
        let want = expected_spin_odd(n, q);
        if got != want || elapsed > Duration::from_secs(30) {
            eprintln!(
                "Spin(2*{n}+1, {q}): elapsed {elapsed:?}\n{}",
                diff_lines(&got, &want)
            );
            ok = false;
        }
    }
    verdict(2, ok);
}

#[test]
fn acceptance_3_omega_even_minus() {
    let started = Instant::now();
    let report = classify_json(&["classify", "OmegaEven", "5", "2", "--sign", "-"]);
    let elapsed = started.elapsed();
    let got = report_multiset(&report);
    let mut want = Multiset::new();
    // The standing low-degree list of Omega^-_10(2) up to q^10 = 1024...
    for (d, c) in [(1u64, 1u64), (154, 1), (187, 1), (340, 1)] {
        add(&mut want, BigInt::from(d), c);
    }
    // ...plus exactly the two new degree-595 characters and one of 748.
    add(&mut want, BigInt::from(595u32), 2);
    add(&mut want, BigInt::from(748u32), 1);
    let ok = got == want && report.total_count() == 7 && elapsed < Duration::from_secs(30);
    if !ok {
        eprintln!("Omega10-(2):\n{}", diff_lines(&got, &want));
    }
    verdict(3, ok);
}

#[test]
fn acceptance_4_spin_even_q3() {
    let started = Instant::now();
    let minus = classify_json(&["classify", "SpinEven", "5", "3", "--sign", "-"]);
    let plus = classify_json(&["classify", "SpinEven", "5", "3", "--sign", "+"]);
    let elapsed = started.elapsed();
    let ms = report_multiset(&minus);
    // q^2 (q^4+1)(q^5+1)/(q+1) at q = 3.
    let special = exact(
        BigInt::from(9) * BigInt::from(82) * BigInt::from(244),
        BigInt::from(4),
    );
    assert_eq!(special, BigInt::from(45018));
    let ok = ms.get(&BigInt::from(42640)).copied() == Some(3)
        && ms.get(&special).copied() == Some(1)
        && plus.total_count() == 8
        && elapsed < Duration::from_secs(60);
    if !ok {
        eprintln!(
            "Spin10±(3): minus multiset {ms:?}, plus total {}",
            plus.total_count()
        );
    }
    verdict(4, ok);
}

fn verify_passes(target: &str, max: Duration) -> bool {
    let started = Instant::now();
    let (ok, stdout) = run_cli(&["verify", target]);
    let elapsed = started.elapsed();
    let parsed: serde_json::Value = serde_json::from_str(&stdout).unwrap_or_default();
    let status_pass = parsed["status"] == "pass";
    if !(ok && status_pass) {
        eprintln!("verify {target}: exit ok = {ok}\n{stdout}");
    }
    if elapsed > max {
        eprintln!("verify {target}: too slow, {elapsed:?}");
    }
    ok && status_pass && elapsed <= max
}

#[test]
fn acceptance_5_bc_minimal_degree_scan() {
    // Nine (n, q) cases at < 2 min each.
    verdict(5, verify_passes("prop3.2", Duration::from_secs(9 * 120)));
}

#[test]
fn acceptance_6_d_family_minimal_degree_scans() {
    let ok = verify_passes("prop3.4", Duration::from_secs(6 * 120))
        && verify_passes("prop3.5", Duration::from_secs(6 * 120));
    // The two n = 5 extras carry the stated degrees at q = 2.
    let q2 = BigInt::from(2);
    let dminus_extra = classical_chars::symbols::Symbol::parse("DMinus:[2 3|]")
        .unwrap()
        .degree()
        .unwrap()
        .eval_int(&q2)
        .unwrap();
    let dplus_extra = classical_chars::symbols::Symbol::parse("DPlus:[0 1 2 4|]")
        .unwrap()
        .degree()
        .unwrap()
        .eval_int(&q2)
        .unwrap();
    // q^2 (q^4+1)(q^5+1)/(q+1) at q = 2 is 748.
    let ok = ok && dminus_extra == BigInt::from(748) && dplus_extra == BigInt::from(868);
    verdict(6, ok);
}

#[test]
fn acceptance_7_bc_rank5_scan() {
    verdict(7, verify_passes("cor3.3", Duration::from_secs(2 * 60)));
}

#[test]
fn acceptance_8_spin12_deep_scan() {
    let started = Instant::now();
    let (ok_run, stdout) = run_cli(&["verify", "prop8.3"]);
    let elapsed = started.elapsed();
    let parsed: serde_json::Value =
        serde_json::from_str(&stdout).expect("verify output parses");
    let details: Vec<&str> = parsed["cases"]
        .as_array()
        .map(|cs| {
            cs.iter()
                .filter_map(|c| c["detail"].as_str())
                .collect()
        })
        .unwrap_or_default();
    let ok = ok_run
        && parsed["status"] == "pass"
        && details.iter().any(|d| d.contains("28 characters"))
        && details.iter().any(|d| d.contains("16 characters"))
        && elapsed < Duration::from_secs(120);
    if !ok {
        eprintln!("verify prop8.3:\n{stdout}");
    }
    verdict(8, ok);
}

#[test]
fn acceptance_9_property_suites() {
    let started = Instant::now();
    let mut ok = true;
    let q3 = BigInt::from(3);

    // Shift invariance of rank and degree.
    for family in [Family::BC, Family::DMinus, Family::DPlus] {
        for ch in enumerate_symbols(4, family) {
            let sym = &ch.symbol;
            let bump = |row: &[u32]| -> Vec<u32> {
                std::iter::once(0).chain(row.iter().map(|&x| x + 1)).collect()
            };
            let (lam, mu) = (bump(sym.lambda()), bump(sym.mu()));
            let shifted = classical_chars::symbols::Symbol::new(family, lam.clone(), mu.clone())
                .unwrap();
            ok &= &shifted == sym;
            ok &= classical_chars::symbols::degree_from_rows(family, &lam, &mu).unwrap()
                == sym.degree().unwrap();
        }
    }

    // Integrality of all degrees at the stated prime powers.
    for family in [Family::BC, Family::DMinus, Family::DPlus] {
        for n in 1..=4u64 {
            for ch in enumerate_symbols(n, family) {
                let deg = ch.symbol.degree().unwrap();
                for q in [2u32, 3, 4, 5, 7, 8, 9] {
                    ok &= deg.eval_int(&BigInt::from(q)).is_ok();
                }
            }
        }
    }

    // Steinberg monomial presence.
    for n in 2..=4u64 {
        ok &= enumerate_symbols(n, Family::BC)
            .iter()
            .any(|ch| ch.symbol.degree().unwrap() == QPoly::q_pow((n * n) as usize));
        ok &= enumerate_symbols(n, Family::DPlus)
            .iter()
            .any(|ch| ch.symbol.degree().unwrap() == QPoly::q_pow((n * (n - 1)) as usize));
    }

    // order_full / order_pprime is a monic q-monomial.
    for spec in [
        classical_chars::orders::GroupSpec::sp(6),
        classical_chars::orders::GroupSpec::so_odd(5),
        classical_chars::orders::GroupSpec::o_even(5, Sign::Minus),
        classical_chars::orders::GroupSpec::gl(3, 1),
        classical_chars::orders::GroupSpec::gu(3, 1),
    ] {
        let quot = spec.order_full().exact_div(&spec.order_pprime()).unwrap();
        ok &= quot.is_monomial() && quot.leading_coefficient().unwrap().is_one();
    }

    // index * centralizer order = group order.
    {
        use classical_chars::centralizers::{enumerate_shapes, DualKind};
        let dual = DualKind::SOOdd;
        let group = dual.order_group(5).order_pprime().eval_int(&q3).unwrap();
        for shape in enumerate_shapes(dual, 5) {
            let index = shape.index_pprime().unwrap().eval_int(&q3).unwrap();
            let cent: BigInt = shape
                .factors()
                .iter()
                .map(|f| f.order_pprime().eval_int(&q3).unwrap())
                .product();
            ok &= index * cent == group;
        }
    }

    // BC symbol counts at ranks 1..3.
    for (n, count) in [(1u64, 2usize), (2, 6), (3, 12)] {
        ok &= enumerate_symbols(n, Family::BC).len() == count;
    }

    // GL hook anchors.
    let gl2 = gl_unipotent_degrees(2, 1, Sign::Plus, None);
    let mut gl2_degrees: Vec<QPoly> =
        gl2.entries.iter().map(|e| e.degree.clone()).collect();
    gl2_degrees.sort_by_key(|d| d.degree());
    ok &= gl2_degrees == vec![QPoly::one(), QPoly::q()];
    for a in 2..=4u32 {
        let set = gl_unipotent_degrees(a, 1, Sign::Plus, None);
        let steinberg = QPoly::q_pow((a * (a - 1) / 2) as usize);
        ok &= set.entries.iter().any(|e| e.degree == steinberg);
    }

    // O4± factor character sets.
    let values = |sign: Sign| -> Vec<BigInt> {
        let mut v = Vec::new();
        for e in o_even_unipotent_degrees(sign, 2, 1, None).unwrap().entries {
            let val = e.degree.eval_int(&q3).unwrap();
            for _ in 0..e.multiplicity {
                v.push(val.clone());
            }
        }
        v.sort();
        v
    };
    let expect = |xs: &[i64]| -> Vec<BigInt> {
        let mut v: Vec<BigInt> = xs.iter().map(|&x| BigInt::from(x)).collect();
        v.sort();
        v
    };
    ok &= values(Sign::Plus) == expect(&[1, 1, 6, 9, 9]);
    ok &= values(Sign::Minus) == expect(&[1, 1, 9, 9]);

    ok &= started.elapsed() < Duration::from_secs(60);
    verdict(9, ok);
}

#[test]
fn json_export_round_trips_byte_identically() {
    let (ok, first) = run_cli(&["export", "SpinOdd", "5", "3"]);
    assert!(ok);
    let parsed: ClassificationReport = serde_json::from_str(&first).unwrap();
    let mut reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    reserialized.push('\n');
    assert_eq!(first, reserialized);
}

#[test]
fn single_degree_cli_examples() {
    let (ok, out) = run_cli(&["degree", "BC:[0 1 6|]", "--at", "3"]);
    assert!(ok);
    assert_eq!(out.trim(), "66066");
    let (ok, out) = run_cli(&["symbols", "DPlus", "5"]);
    assert!(ok);
    assert!(out.lines().any(|l| l == "DPlus:[0 1 2 4|] degree@2=868"));
}

#[test]
fn invalid_configuration_exits_two() {
    let out = Command::new(BIN)
        .args(["classify", "OmegaEven", "5", "3", "--sign", "-"]) // odd q invalid
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(BIN)
        .args(["classify", "Sp", "6", "6"]) // not a prime power
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
