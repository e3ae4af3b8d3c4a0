//! End-to-end acceptance checks; prints one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{fibonacci, fixture, language_words, two_blocks, value};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use numsys::algebra::{cyclotomic_table, minimal_recurrence, IntPoly};
use numsys::ans::{decide_ans, AbstractSystem};
use numsys::automata::{count_from, word_index, Dfa};
use numsys::hd0l::{build_presentation, decide_hd0l, Morphism, WordVerdict};
use numsys::io::{read_json, MorphismJson, RecurrenceJson};
use numsys::linrec::{engstrom_index, n_growth_criterion, residue_profile, LinearRecurrence, PrimeVerdict};
use numsys::positional::{decide, PositionalSystem};
use numsys::search::SearchOptions;
use numsys::upset::{DecisionVerdict, UpSet};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);
type Expectation = (&'static str, fn(&WordVerdict) -> bool);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn recurrence(name: &str) -> LinearRecurrence {
    read_json::<RecurrenceJson>(&fixture(name)).unwrap().to_recurrence().unwrap()
}

fn within(start: Instant, limit: Duration) -> Check {
    let spent = start.elapsed();
    ensure!(spent <= limit, "took {spent:?}, limit {limit:?}");
    Ok(())
}

fn fibonacci_round_trips() -> Check {
    let start = Instant::now();
    let fib = fibonacci();
    let rep = fib.format_digits(&fib.greedy_rep(&BigUint::from(15u32)));
    ensure!(rep == "100010", "rep(15) = {rep}");
    let val = fib.val(&fib.parse_digits("101001").unwrap()).unwrap();
    ensure!(val == BigUint::from(19u32), "val(101001) = {val}");
    for n in 0..10_000u32 {
        let n = BigUint::from(n);
        ensure!(fib.val(&fib.greedy_rep(&n)).unwrap() == n, "round trip fails at {n}");
    }
    within(start, Duration::from_secs(1))
}

const TABLE: [&str; 25] = [
    "", "a", "c", "aa", "ab", "cc", "cd", "aaa", "aab", "aba", "ccc", "ccd", "cdc", "aaaa", "aaab", "aaba", "abaa",
    "abab", "cccc", "cccd", "ccdc", "cdcc", "cdcd", "aaaaa", "aaaab",
];

fn two_blocks_table() -> Check {
    let start = Instant::now();
    let s = two_blocks();
    for (n, expected) in TABLE.iter().enumerate() {
        let got = s.format_word(&s.rep_s(&BigUint::from(n)).unwrap());
        ensure!(got == *expected, "rep({n}) = {got}, expected {expected}");
    }
    let q0 = s.language().initial();
    let v: Vec<BigInt> = (0..12).map(|i| BigInt::from(count_from(s.language(), q0, i).1)).collect();
    ensure!(v[..3] == [1, 3, 7].map(BigInt::from), "v_0..v_2 = {:?}", &v[..3]);
    let fit = minimal_recurrence(&v, 4).unwrap().ok_or("no recurrence found")?;
    let coeffs = fit.integer_coeffs().ok_or("non-integral recurrence")?;
    ensure!(coeffs == [2, 0, -1].map(BigInt::from), "recurrence {coeffs:?}");
    within(start, Duration::from_secs(1))
}

fn five_term_example() -> Check {
    let start = Instant::now();
    let r = recurrence("five-term.json");
    ensure!(r.hankel_determinant() == BigInt::from(8458240), "Hankel determinant {}", r.hankel_determinant());
    let verdict = n_growth_criterion(&r).map_err(|e| e.to_string())?;
    let expected = PrimeVerdict::Bounded { a: IntPoly::from_i64(&[1, 0, 0, 1]), b: IntPoly::from_i64(&[1, -6, -3]) };
    ensure!(verdict.primes == vec![(3, expected)], "criterion: {verdict}");
    let counts: Vec<usize> = (1..=5).map(|v| residue_profile(&r, 3u64.pow(v)).recurring_count).collect();
    ensure!(counts == [3, 5, 6, 6, 6], "N(3^v) = {counts:?}");
    within(start, Duration::from_secs(5))
}

fn four_term_diverges() -> Check {
    let r = recurrence("four-term.json");
    ensure!(r.reciprocal_poly() == IntPoly::from_i64(&[1, -3, -2, 0, -3]), "P_U = {}", r.reciprocal_poly());
    let verdict = n_growth_criterion(&r.minimized().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure!(verdict.primes == vec![(3, PrimeVerdict::Divergent)], "criterion: {verdict}");
    ensure!(verdict.diverges_for_all_m, "criterion: {verdict}");
    Ok(())
}

fn residue_table() -> Check {
    let r = recurrence("u3.json");
    let p = residue_profile(&r, 27);
    ensure!(p.preperiod_values == [1, 2, 3], "preperiod {:?}", p.preperiod_values);
    let period = [5, 9, 14, 24, 14, 12, 5, 0, 14, 15, 14, 3, 5, 18, 14, 6, 14, 21];
    ensure!(p.period_values == period, "period {:?}", p.period_values);
    ensure!(engstrom_index(&r, 3).map_err(|e| e.to_string())? == Some(1), "s(3) != 1");
    for v in 1..=8u32 {
        let iota = residue_profile(&r, 3u64.pow(v)).preperiod;
        ensure!(iota <= v as usize, "ι(3^{v}) = {iota}");
    }
    Ok(())
}

fn small_up_sets() -> Vec<UpSet> {
    let bits = |len: usize| (0..1u32 << len).map(move |m| (0..len).map(|i| m >> i & 1 == 1).collect::<Vec<_>>());
    let mut out = BTreeSet::new();
    for a in 0..=3 {
        for p in 1..=6 {
            for u in bits(a) {
                for v in bits(p) {
                    let up = UpSet::new(u.clone(), v).unwrap();
                    out.insert((up.preperiod().to_vec(), up.period().to_vec()));
                }
            }
        }
    }
    out.into_iter().map(|(u, v)| UpSet::new(u, v).unwrap()).collect()
}

fn end_to_end() -> Check {
    let start = Instant::now();
    let sets = small_up_sets();
    let fib: PositionalSystem = fibonacci();
    let two: AbstractSystem = two_blocks();
    for up in &sets {
        let got = decide(&fib, &fib.up_set_dfa(up).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(got.up_set() == Some(up), "fibonacci, {up}: {got}");
        let got = decide_ans(&two, &two.up_set_dfa(up).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(got.up_set() == Some(up), "two-blocks, {up}: {got}");
    }
    let powers = Dfa::new(Dfa::digit_alphabet(2), 2, 0, [1], [(0, 1, 1), (1, 0, 1)]).unwrap();
    let got = decide(&fib, &powers).map_err(|e| e.to_string())?;
    ensure!(matches!(got, DecisionVerdict::NotUltimatelyPeriodic { .. }), "10*: {got}");
    within(start, Duration::from_secs(120))
}

fn oracle_equivalence() -> Check {
    let ans = [
        two_blocks(),
        AbstractSystem::new(
            &Dfa::with_symbols(vec!["a".into(), "b".into()], 2, 0, [0, 1], [(0, "a", 0), (0, "b", 1), (1, "b", 1)])
                .unwrap(),
        )
        .unwrap(),
        AbstractSystem::new(
            &Dfa::with_symbols(vec!["a".into(), "b".into()], 2, 0, [0, 1], [(0, "a", 0), (0, "b", 1), (1, "a", 0)])
                .unwrap(),
        )
        .unwrap(),
    ];
    for s in &ans {
        for (n, w) in language_words(s.language(), 10).iter().enumerate() {
            let v = s.val_s(w).map_err(|e| e.to_string())?;
            ensure!(v == BigUint::from(n), "val_S({}) = {v}, index {n}", s.format_word(w));
            ensure!(word_index(s.language(), w).map_err(|e| e.to_string())? == v, "index mismatch");
        }
    }
    let fib = fibonacci();
    let scale = fib.scale(11);
    let words = common::all_words(2, 10);
    for a in 1..=7u64 {
        for b in 0..a {
            let d = fib.congruence_dfa(a, b).map_err(|e| e.to_string())?;
            for w in &words {
                let member = value(&scale, w).mod_floor(&BigUint::from(a)) == BigUint::from(b);
                ensure!(d.accepts(w) == member, "a = {a}, b = {b}, word {w:?}");
            }
        }
    }
    Ok(())
}

fn hd0l() -> Check {
    let load = |name: &str| read_json::<MorphismJson>(&fixture(name)).unwrap().to_morphisms().unwrap();
    let cases: [Expectation; 3] = [
        ("fibonacci-word.json", |v| *v == WordVerdict::NotUltimatelyPeriodic),
        ("ab-periodic.json", |v| *v == WordVerdict::UltimatelyPeriodic { preperiod: 0, period: 2 }),
        ("constant.json", |v| *v == WordVerdict::UltimatelyPeriodic { preperiod: 0, period: 1 }),
    ];
    for (name, expected) in cases {
        let (f, g, a): (Morphism, Morphism, char) = load(name);
        let pres = build_presentation(&f, &g, a).map_err(|e| format!("{name}: {e}"))?;
        let direct = g.fixed_point_prefix(a, 500).map_err(|e| e.to_string())?;
        for (i, w) in pres.system.language().words().take(500).enumerate() {
            let want = f.image(direct[i]).map(|c| c[0].to_string());
            ensure!(pres.letter(&w).map(str::to_string) == want, "{name}: letter {i} differs");
        }
        let verdict = decide_hd0l(&f, &g, a, SearchOptions::default()).map_err(|e| format!("{name}: {e}"))?;
        ensure!(expected(&verdict.overall), "{name}: {:?}", verdict.overall);
    }
    Ok(())
}

fn recurrences() -> impl Strategy<Value = LinearRecurrence> {
    (1usize..=3)
        .prop_flat_map(|k| (prop::collection::vec(-4i64..=4, k), prop::collection::vec(0i64..=9, k), 1i64..=4))
        .prop_map(|(mut coeffs, initial, last)| {
            *coeffs.last_mut().unwrap() = last;
            LinearRecurrence::from_i64(&coeffs, &initial).unwrap()
        })
}

fn invariants() -> Check {
    let mut runner = TestRunner::new(Config { cases: 200, ..Config::default() });
    runner
        .run(&(recurrences(), 2u64..60), |(r, m)| {
            let p = residue_profile(&r, m);
            prop_assert!(p.recurring_count <= p.period);
            prop_assert!((p.period as u128) <= (p.recurring_count as u128).pow(r.order() as u32));
            Ok(())
        })
        .map_err(|e| format!("N <= π <= N^k: {e}"))?;
    runner
        .run(&(recurrences(), 2u64..13, 2u64..13), |(r, a, b)| {
            prop_assume!(a.gcd(&b) == 1);
            let lcm = residue_profile(&r, a).period.lcm(&residue_profile(&r, b).period);
            prop_assert_eq!(residue_profile(&r, a * b).period, lcm);
            Ok(())
        })
        .map_err(|e| format!("π(pq) = lcm: {e}"))?;
    runner
        .run(&(recurrences(), 2u64..60), |(r, m)| {
            prop_assume!(BigInt::from(m).gcd(r.last_coeff()) == BigInt::from(1));
            prop_assert_eq!(residue_profile(&r, m).preperiod, 0);
            Ok(())
        })
        .map_err(|e| format!("pure periodicity: {e}"))?;
    runner
        .run(&(1u64..=30), |n| {
            let table = cyclotomic_table(n);
            let product = (1..=n).filter(|d| n % d == 0).fold(IntPoly::one(), |acc, d| &acc * &table[d as usize - 1]);
            prop_assert_eq!(product, IntPoly::x_pow_minus_one(n as usize));
            Ok(())
        })
        .map_err(|e| format!("cyclotomic product: {e}"))?;
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Fibonacci representations and round trips", fibonacci_round_trips),
        ("abstract system table and count recurrence", two_blocks_table),
        ("five-term recurrence: determinant, factorization, residue counts", five_term_example),
        ("growth criterion diverges for the four-term recurrence", four_term_diverges),
        ("residue table modulo 27 and preperiod bound", residue_table),
        ("decisions recover every small ultimately periodic set", end_to_end),
        ("closed formulas and congruence automata agree with brute force", oracle_equivalence),
        ("morphic words", hd0l),
        ("recurrence and cyclotomic invariants", invariants),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let spent = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({spent:.2?})", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({spent:.2?}): {reason}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
