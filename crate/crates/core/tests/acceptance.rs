//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::time::Instant;

use num_bigint::BigInt;
use qcong_core::divisors::{big_p, q_bar};
use qcong_core::sequences::{euler, salie, salie_bar, salie_hat, salie_tilde, tangent};
use qcong_core::verify::{
    explore_conjecture51, explore_conjecture61, run_suite, Bounds, Report, Suite,
};
use qcong_core::{factor_one_plus_qd, FactoredPoly, IntPoly};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn one_plus(d: usize) -> IntPoly {
    IntPoly::one_plus_q_pow(d)
}

fn expect_eq(label: &str, got: &IntPoly, want: &IntPoly) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: got {got}, expected {want}"))
    }
}

fn run_all(suite: Suite, bounds: Bounds) -> Outcome {
    let reports = run_suite(suite, &bounds).map_err(|e| e.to_string())?;
    if reports.is_empty() {
        return Err(format!("{suite}: no instances"));
    }
    let failed: Vec<&Report> = reports.iter().filter(|r| !r.passed()).collect();
    match failed.first() {
        None => Ok(()),
        Some(first) => Err(format!(
            "{suite}: {} of {} failed, first: {first}",
            failed.len(),
            reports.len()
        )),
    }
}

fn bounds(n_max: usize, m_max: usize, k_max: usize, d_max: usize) -> Bounds {
    Bounds {
        n_max,
        m_max,
        k_max,
        d_max,
    }
}

fn first_values() -> Outcome {
    expect_eq("E_0", &euler(0), &p(&[1]))?;
    expect_eq("E_2", &euler(1), &p(&[-1]))?;
    let e4 = p(&[0, 1]) * p(&[1, 1]) * one_plus(2) + p(&[0, 0, 1]);
    expect_eq("E_4", &euler(2), &e4)?;
    let e6 = -(IntPoly::q_pow(2) * one_plus(3) * p(&[1, 4, 5, 7, 6, 5, 2, 1])) + IntPoly::q_pow(3);
    expect_eq("E_6", &euler(3), &e6)?;

    expect_eq("S_0", &salie(0), &p(&[1]))?;
    expect_eq("S_2", &salie(1), &p(&[1, 1]))?;

    let two = BigInt::from(2);
    let bar = [
        p(&[1]),
        p(&[2]),
        (one_plus(2) * p(&[1, 1, 1])).scale(&two),
        (one_plus(2) * p(&[1, 1, 2, 4, 6, 6, 6, 5, 4, 2, 1])).scale(&two),
    ];
    let hat = [
        p(&[1]),
        one_plus(2),
        p(&[0, 1]) * one_plus(2) * p(&[1, 3, 1, 1]),
        IntPoly::q_pow(2) * one_plus(2).pow(2) * p(&[1, 4, 7, 6, 6, 6, 5, 2, 1]),
    ];
    let tilde = [
        p(&[1]),
        one_plus(1),
        p(&[0, 1]) * one_plus(1) * one_plus(2) * p(&[2, 1]),
        IntPoly::q_pow(2) * one_plus(1) * one_plus(2) * one_plus(3) * p(&[2, 4, 5, 4, 3, 1]),
    ];
    for n in 0..=3 {
        expect_eq(&format!("bar S_{}", 2 * n), &salie_bar(n), &bar[n])?;
        expect_eq(&format!("hat S_{}", 2 * n), &salie_hat(n), &hat[n])?;
        expect_eq(&format!("tilde S_{}", 2 * n), &salie_tilde(n), &tilde[n])?;
    }
    Ok(())
}

/// Rows written as `(d, e)` pairs meaning `prod (1 + q^d)^e`, as printed.
fn table_row(pairs: &[(usize, u32)]) -> (FactoredPoly, IntPoly) {
    let factored = pairs.iter().fold(FactoredPoly::one(), |acc, &(d, e)| {
        acc.mul(&factor_one_plus_qd(d).pow(e))
    });
    let expanded = pairs.iter().map(|&(d, e)| one_plus(d).pow(e)).product();
    (factored, expanded)
}

fn compare_table(
    name: &str,
    computed: impl Fn(usize) -> FactoredPoly,
    rows: &[&[(usize, u32)]],
) -> Vec<String> {
    let mut problems = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let n = i + 1;
        let (want_factored, want_expanded) = table_row(row);
        let got = computed(n);
        if got != want_factored {
            problems.push(format!(
                "{name}_{n} factored: got {got}, table {want_factored}"
            ));
        }
        if got.expand() != want_expanded {
            problems.push(format!(
                "{name}_{n} expanded: got {}, table {want_expanded}",
                got.expand()
            ));
        }
    }
    problems
}

fn tables() -> Outcome {
    let table1: [&[(usize, u32)]; 8] = [
        &[(1, 1)],
        &[(1, 2)],
        &[(1, 2), (3, 1)],
        &[(1, 3), (3, 1)],
        &[(1, 3), (3, 1), (5, 1)],
        &[(1, 3), (3, 2), (5, 1)],
        &[(1, 3), (3, 2), (5, 1), (7, 1)],
        &[(1, 4), (3, 2), (5, 1), (7, 1)],
    ];
    let table2: [&[(usize, u32)]; 8] = [
        &[],
        &[(2, 1)],
        &[(2, 1)],
        &[(2, 2), (4, 1)],
        &[(2, 2), (4, 1)],
        &[(2, 2), (4, 2), (6, 1)],
        &[(2, 2), (4, 1), (6, 1)],
        &[(2, 3), (4, 2), (6, 1), (8, 1)],
    ];
    let mut problems = compare_table("P", big_p, &table1);
    problems.extend(compare_table("Qbar", q_bar, &table2));
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("; "))
    }
}

/// Runs every part, so one failing part does not hide the others.
fn all_parts(parts: &[(Suite, Bounds)]) -> Outcome {
    let problems: Vec<String> = parts
        .iter()
        .filter_map(|(s, b)| run_all(*s, *b).err())
        .collect();
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("; "))
    }
}

fn lemma_and_eq24() -> Outcome {
    all_parts(&[
        (Suite::Lemma41, bounds(15, 0, 0, 0)),
        (Suite::Eq24, bounds(15, 0, 0, 0)),
    ])
}

fn generalized() -> Outcome {
    all_parts(&[
        (Suite::Theorem51, bounds(0, 6, 3, 6)),
        (Suite::Theorem52, bounds(0, 8, 2, 8)),
    ])
}

fn gauss_and_lucas() -> Outcome {
    all_parts(&[
        (Suite::Gauss, bounds(0, 30, 0, 0)),
        (Suite::QLucas, bounds(0, 24, 0, 8)),
    ])
}

fn perm_oracles() -> Outcome {
    all_parts(&[
        (Suite::PermEuler, bounds(4, 0, 0, 0)),
        (Suite::PermSalie, bounds(4, 0, 0, 0)),
    ])
}

/// `E_{2m}(1)` and `T_{2m+1}(1)` from the integer recurrences with ordinary
/// binomials, independent of the q-machinery.
fn integer_secant_tangent(len: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let binom = |n: usize, k: usize| -> BigInt {
        (0..k).fold(BigInt::from(1), |acc, i| {
            acc * BigInt::from(n - i) / BigInt::from(i + 1)
        })
    };
    let mut e: Vec<BigInt> = Vec::new();
    let mut t: Vec<BigInt> = Vec::new();
    for m in 0..len {
        let mut em = if m == 0 {
            BigInt::from(1)
        } else {
            BigInt::from(0)
        };
        for (k, ek) in e.iter().enumerate() {
            em -= binom(2 * m, 2 * k) * ek;
        }
        e.push(em);
        // sum_k (-1)^k C(2m+1, 2k+1) ... from sin = tan * cos at x^{2m+1}
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let mut tm = BigInt::from(sign);
        for (k, tk) in t.iter().enumerate() {
            let s = if (m - k) % 2 == 0 { 1 } else { -1 };
            tm -= BigInt::from(s) * binom(2 * m + 1, 2 * k + 1) * tk;
        }
        t.push(tm);
    }
    (e, t)
}

fn specializations() -> Outcome {
    let one = BigInt::from(1);
    let (e_int, t_int) = integer_secant_tangent(7);
    let printed_secant = [1, 1, 5, 61, 1385, 50521, 2702765];
    let printed_tangent = [1, 2, 16, 272, 7936, 353792, 22368256];
    for n in 0..=6 {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let e1 = euler(n).eval(&one);
        if e1 != e_int[n] || e1 != BigInt::from(sign * printed_secant[n]) {
            return Err(format!("E_{}(1) = {e1}", 2 * n));
        }
        let t1 = tangent(n).eval(&one);
        if t1 != t_int[n] || t1 != BigInt::from(printed_tangent[n]) {
            return Err(format!("T_{}(1) = {t1}", 2 * n + 1));
        }
    }
    run_all(Suite::Specializations, bounds(15, 0, 0, 0))
}

fn conjectures() -> Outcome {
    let c51 = explore_conjecture51(3, 10);
    let c61 = explore_conjecture61(12);
    let fails: Vec<String> = c51
        .iter()
        .chain(c61.iter())
        .filter(|r| !r.holds)
        .map(|r| format!("{} {:?} witness {}", r.conjecture, r.params, r.witness))
        .collect();
    if fails.is_empty() {
        Ok(())
    } else {
        Err(format!(
            "{} instance(s) fail: {}",
            fails.len(),
            fails.join("; ")
        ))
    }
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("first values E, S, S-bar, S-hat, S-tilde", first_values),
        ("tables of P_n and Qbar_n", tables),
        ("E congruence iff-sweep mod 1+q^d", || {
            run_all(Suite::Theorem1, bounds(0, 12, 0, 12))
        }),
        ("E congruence iff-sweep mod Phi_2d", || {
            run_all(Suite::Lemma31, bounds(0, 12, 0, 12))
        }),
        ("E difference product divisibility", || {
            run_all(Suite::Corollary1, bounds(0, 10, 0, 0))
        }),
        ("P_n divides S_2n", || {
            run_all(Suite::Theorem2, bounds(15, 0, 0, 0))
        }),
        ("convolution identities for S and S-hat", lemma_and_eq24),
        ("S-bar as signed Euler sum", || {
            run_all(Suite::Eq23, bounds(15, 0, 0, 0))
        }),
        ("generalized Euler congruences", generalized),
        ("Gaussian factorization and q-Lucas", gauss_and_lucas),
        ("D_n divides T_2n+1 and (1+q)^n divides S_2n", || {
            run_all(Suite::Foata, bounds(15, 0, 0, 0))
        }),
        ("permutation oracles", perm_oracles),
        ("specializations at q = 1", specializations),
        ("conjecture explorers", conjectures),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:2} PASS ({secs:.2}s) {name}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:2} FAIL ({secs:.2}s) {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
