//! Acceptance suite. Each criterion prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test -p curvres-core --test acceptance -- --nocapture` to see them.

use std::time::{Duration, Instant};

use curvres_core::groebner::GroebnerEngine;
use curvres_core::hilbert::{verify_hilbert, verify_table, Status};
use curvres_core::idealgen::{
    ideal_i, verify_colon_lemmas_with, verify_minimal_generation_with, verify_phi_vanishing,
    ColonCheck,
};
use curvres_core::resolution::{
    betti_of_translate, cm_type, frobenius_formula, gorenstein_duality_check, minimal_table,
    periodicity_scan, reg_frobenius_identity, total_betti, TranslateOutcome,
};
use curvres_core::semigroup::{frobenius_bruteforce, validate};
use curvres_core::{ArithmeticSequence, RawSequence, ShiftMultiset};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

fn sweep(n_range: std::ops::RangeInclusive<usize>, m0_max: u64, d_max: u64) -> Vec<ArithmeticSequence> {
    let mut out = Vec::new();
    for n in n_range {
        for m0 in 1..=m0_max {
            for d in 1..=d_max {
                if let Ok(s) = validate(m0 as i64, d as i64, n as i64) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// The Hilbert sweep range, also used for the invariant and Gorenstein criteria.
fn wide_range() -> Vec<ArithmeticSequence> {
    sweep(1..=6, 60, 7)
}

/// The Gröbner range.
fn groebner_range() -> Vec<ArithmeticSequence> {
    sweep(2..=4, 25, 4)
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

fn ms(v: &[u64]) -> ShiftMultiset {
    v.iter().copied().collect()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let expected: [(i64, Vec<u64>); 4] = [
        (5, vec![1, 10, 20, 15, 4]),
        (6, vec![1, 9, 16, 9, 1]),
        (7, vec![1, 8, 12, 7, 2]),
        (8, vec![1, 7, 14, 11, 3]),
    ];
    let mut ok = true;
    for (m0, betti) in &expected {
        // Every d coprime to m0 gives the same pattern.
        for d in 1..=12 {
            if let Ok(s) = validate(*m0 + 4 * d, d, 4) {
                ok &= total_betti(&s) == *betti;
            }
        }
        ok &= total_betti(&validate(*m0, 1, 4).unwrap()) == *betti;
    }
    let elapsed = start.elapsed();
    Outcome {
        ok: ok && elapsed < Duration::from_secs(1),
        detail: format!("four n=4 patterns, {elapsed:?}"),
    }
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let p1 = minimal_table(&validate(11, 2, 4).unwrap(), 4).unwrap();
    let p1_expected = vec![
        ms(&[0]),
        ms(&[26, 28, 30, 30, 32, 34, 55, 57]),
        ms(&[41, 43, 43, 45, 45, 47, 47, 49, 68, 70, 72, 74]),
        ms(&[58, 60, 62, 98, 100, 102, 104]),
        ms(&[115, 117]),
    ];
    let p2 = minimal_table(&validate(7, 5, 4).unwrap(), 4).unwrap();
    let p2_expected = vec![
        ms(&[0]),
        ms(&[24, 29, 34, 34, 39, 44, 49, 54]),
        ms(&[41, 46, 46, 51, 51, 56, 56, 61, 61, 66, 71, 76]),
        ms(&[63, 68, 73, 95, 100, 105, 110]),
        ms(&[117, 122]),
    ];
    let ok = p1.columns() == p1_expected.as_slice() && p2.columns() == p2_expected.as_slice();
    let elapsed = start.elapsed();
    Outcome {
        ok: ok && elapsed < Duration::from_secs(1),
        detail: format!("(11,..,19) and (7,..,27) shift-exact, {elapsed:?}"),
    }
}

fn criterion_3() -> Outcome {
    let seqs = wide_range();
    let start = Instant::now();
    let failures: Vec<String> = seqs
        .par_iter()
        .filter_map(|s| {
            let r = verify_hilbert(s, None);
            (!r.passed()).then(|| format!("{s} at {:?}", r.first_mismatch))
        })
        .collect();
    Outcome {
        ok: failures.is_empty() && seqs.len() >= 300,
        detail: format!(
            "{} sequences, {} failures {:?}, {:?}",
            seqs.len(),
            failures.len(),
            failures.iter().take(5).collect::<Vec<_>>(),
            start.elapsed()
        ),
    }
}

fn criterion_4() -> Outcome {
    let seqs = groebner_range();
    let engine = GroebnerEngine::default();
    let start = Instant::now();
    let failures: Vec<String> = seqs
        .par_iter()
        .filter_map(|s| match verify_colon_lemmas_with(s, &engine) {
            Ok(checks) if checks.len() == s.n() - s.b() + 1 && checks.iter().all(ColonCheck::passed) => None,
            Ok(checks) => Some(format!("{s}: {checks:?}")),
            Err(e) => Some(format!("{s}: {e}")),
        })
        .collect();
    Outcome {
        ok: failures.is_empty(),
        detail: format!(
            "{} sequences, {} failures {:?}, {:?}",
            seqs.len(),
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>(),
            start.elapsed()
        ),
    }
}

fn criterion_5() -> Outcome {
    let seqs = groebner_range();
    let engine = GroebnerEngine::default();
    let start = Instant::now();
    let failures: Vec<String> = seqs
        .par_iter()
        .filter_map(|s| {
            let (n, b) = (s.n() as u64, s.b() as u64);
            let count = ideal_i(s, s.n()).unwrap().len() as u64;
            let expected = binom(n, 2) + n - b + 1;
            let phi = verify_phi_vanishing(s, s.n()) == Ok(true);
            let mingen = verify_minimal_generation_with(s, &engine) == Ok(true);
            let ok = phi && mingen && count == expected && count == total_betti(s)[1];
            (!ok).then(|| format!("{s}: phi={phi} mingen={mingen} count={count}"))
        })
        .collect();
    Outcome {
        ok: failures.is_empty(),
        detail: format!(
            "{} sequences, {} failures {:?}, {:?}",
            seqs.len(),
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>(),
            start.elapsed()
        ),
    }
}

fn criterion_6() -> Outcome {
    let seqs: Vec<_> = wide_range().into_iter().filter(|s| s.n() >= 2 && s.b() == 2).collect();
    let failures: Vec<String> = seqs
        .iter()
        .filter_map(|s| {
            let table = minimal_table(s, s.n()).unwrap();
            let betti = total_betti(s);
            let n = s.n() as u64;
            let palindrome = (0..=s.n()).all(|j| betti[j] == betti[s.n() - j]);
            let closed = (1..n).all(|j| betti[j as usize] == j * binom(n, j + 1) + (n - j) * binom(n, j - 1));
            let dual = gorenstein_duality_check(&table) == Ok(true);
            (!(palindrome && closed && dual)).then(|| s.to_string())
        })
        .collect();
    Outcome {
        ok: failures.is_empty() && !seqs.is_empty(),
        detail: format!("{} Gorenstein sequences, {} failures {:?}", seqs.len(), failures.len(), failures),
    }
}

fn criterion_7() -> Outcome {
    let seqs = wide_range();
    let failures: Vec<String> = seqs
        .par_iter()
        .filter_map(|s| {
            let betti = total_betti(s);
            let (n, m0) = (s.n() as u64, s.m0());
            let table = minimal_table(s, s.n()).unwrap();
            let c = cm_type(s);
            let mut problems = Vec::new();
            if betti[s.n()] != c || c < 1 || c > n || (c % n) != (m0 - 1) % n {
                problems.push("cm type");
            }
            if frobenius_formula(s) != frobenius_bruteforce(s) {
                problems.push("frobenius");
            }
            if !reg_frobenius_identity(s) {
                problems.push("reg-g identity");
            }
            let euler: i64 = betti.iter().enumerate().map(|(j, &b)| if j % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
            if euler != 0 || table.euler_characteristic() != 0 {
                problems.push("euler");
            }
            if table.ranks() != betti {
                problems.push("column counts");
            }
            if s.b() == 1 && (1..=n).any(|j| betti[j as usize] != j * binom(n + 1, j + 1)) {
                problems.push("b=1 formula");
            }
            (!problems.is_empty()).then(|| format!("{s}: {problems:?}"))
        })
        .collect();
    Outcome {
        ok: failures.is_empty(),
        detail: format!("{} sequences, {} failures {:?}", seqs.len(), failures.len(), failures.iter().take(5).collect::<Vec<_>>()),
    }
}

fn criterion_8() -> Outcome {
    let mut raws = vec![
        RawSequence::new(vec![11, 13, 15, 17, 19]).unwrap(),
        RawSequence::new(vec![7, 12, 17, 22, 27]).unwrap(),
    ];
    let mut rng = StdRng::seed_from_u64(0x5eed);
    while raws.len() < 22 {
        let m0: u64 = rng.gen_range(1..=40);
        let d: u64 = rng.gen_range(1..=9);
        let n: u64 = rng.gen_range(1..=6);
        raws.push(RawSequence::new((0..=n).map(|i| m0 + i * d).collect()).unwrap());
    }
    let start = Instant::now();
    let jmax = 300;
    let mut failures = Vec::new();
    let mut compared = 0;
    for raw in &raws {
        let n = raw.values().len() as u64 - 1;
        let d = raw.values()[1] - raw.values()[0];
        let threshold = (n * d).saturating_sub(raw.values()[0]);
        let report = periodicity_scan(raw, threshold, jmax).unwrap();
        compared += report.comparisons.len();
        // Independent restatement: both translates evaluated directly.
        for c in &report.comparisons {
            let x = betti_of_translate(raw, c.j).unwrap();
            let y = betti_of_translate(raw, c.j + n * d).unwrap();
            if let (TranslateOutcome::Betti(x), TranslateOutcome::Betti(y)) = (&x, &y) {
                if x != y {
                    failures.push(format!("{raw} j={}", c.j));
                }
            }
        }
        if !report.holds() {
            failures.push(format!("{raw}: {:?}", report.violations()));
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: format!(
            "{} sequences, {compared} comparisons, failures {:?}, {:?}",
            raws.len(),
            failures,
            start.elapsed()
        ),
    }
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    let mut rng = StdRng::seed_from_u64(9);
    let mut corrupted = 0;
    for s in [(11, 2, 4), (7, 5, 4), (3, 1, 2), (6, 1, 4), (2, 1, 1), (13, 3, 5)] {
        let seq = validate(s.0, s.1, s.2).unwrap();
        let good = minimal_table(&seq, seq.n()).unwrap();
        for _ in 0..5 {
            let j = rng.gen_range(1..=seq.n());
            let shifts = good.column(j).to_vec();
            let pick = rng.gen_range(0..shifts.len());
            let mut column = ShiftMultiset::new();
            for (k, &x) in shifts.iter().enumerate() {
                column.insert(if k == pick { x + 1 } else { x }, 1);
            }
            let mut columns = good.columns().to_vec();
            columns[j] = column;
            let bad = curvres_core::GradedBettiTable::from_columns(seq, seq.n(), columns);
            let r = verify_table(&bad, None);
            ok &= r.status == Status::Fail && r.first_mismatch == Some(shifts[pick]);
            corrupted += 1;
        }
    }
    let raw = RawSequence::new(vec![7, 10, 15]).unwrap();
    ok &= ArithmeticSequence::from_raw(&raw).is_err();
    ok &= betti_of_translate(&raw, 0).is_err();
    ok &= periodicity_scan(&raw, 0, 50).is_err();
    Outcome {
        ok,
        detail: format!("{corrupted} corrupted tables rejected; (7,10,15) rejected"),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 n=4 Betti patterns", criterion_1),
        ("2 golden resolutions", criterion_2),
        ("3 Hilbert oracle sweep", criterion_3),
        ("4 colon lemma", criterion_4),
        ("5 phi-vanishing and minimal generation", criterion_5),
        ("6 Gorenstein duality", criterion_6),
        ("7 invariant identities", criterion_7),
        ("8 periodicity", criterion_8),
        ("9 negative controls", criterion_9),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let outcome = check();
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {name}: {}", outcome.detail);
        if !outcome.ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
