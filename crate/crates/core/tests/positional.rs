mod common;

use common::{all_words, fibonacci, language_words, positional_fixtures, value};
use num_bigint::BigUint;
use numsys::automata::equivalent;
use numsys::linrec::residue_profile;
use numsys::positional::decide;
use numsys::upset::{DecisionVerdict, UpSet};
use proptest::prelude::*;

#[test]
fn fibonacci_examples() {
    let fib = fibonacci();
    assert_eq!(fib.format_digits(&fib.greedy_rep(&BigUint::from(15u32))), "100010");
    assert_eq!(fib.val(&fib.parse_digits("101001").unwrap()).unwrap(), BigUint::from(19u32));
}

#[test]
fn greedy_words_are_the_language_in_order() {
    for (name, sys) in positional_fixtures() {
        let scale = sys.scale(12);
        for (n, w) in language_words(sys.language(), 9).into_iter().enumerate() {
            assert_eq!(value(&scale, &w), BigUint::from(n), "{name}: word {w:?}");
            assert_eq!(sys.greedy_rep(&BigUint::from(n)), w, "{name}: n = {n}");
        }
    }
}

#[test]
fn fixtures_validate() {
    for (name, sys) in positional_fixtures() {
        assert!(sys.validate(10).passed(), "{name}");
    }
}

#[test]
fn congruences_match_brute_force() {
    for (name, sys) in positional_fixtures() {
        let scale = sys.scale(11);
        let words = all_words(sys.digit_bound(), if sys.digit_bound() > 2 { 7 } else { 10 });
        for a in 1..=7u64 {
            let automata: Vec<_> = (0..a).map(|b| sys.congruence_dfa(a, b).unwrap()).collect();
            for w in &words {
                let r = (value(&scale, w) % BigUint::from(a)).to_u64_digits().first().copied().unwrap_or(0);
                for (b, d) in automata.iter().enumerate() {
                    assert_eq!(d.accepts(w), r == b as u64, "{name}: a = {a}, b = {b}, w = {w:?}");
                }
            }
        }
    }
}

#[test]
fn periodic_sets_need_long_preperiod_automata() {
    let fib = fibonacci();
    for (pre, per) in [("0000001", "01"), ("1", "001"), ("00000000", "1")] {
        let up = UpSet::parse(pre, per).unwrap();
        let states = fib.up_set_dfa(&up).unwrap().minimize().live_state_count();
        let a = up.preperiod_len();
        let word_len = if a == 0 { 0 } else { fib.greedy_rep(&BigUint::from(a - 1)).len() };
        let iota = residue_profile(fib.recurrence(), up.period_len() as u64).preperiod;
        assert!(states + iota >= word_len, "{up}: {states} states");
    }
}

#[test]
fn decide_recovers_sets() {
    let fib = fibonacci();
    for (pre, per) in [("", "1"), ("1", "0"), ("", "01"), ("110", "001"), ("0", "10010")] {
        let up = UpSet::parse(pre, per).unwrap();
        let x = fib.up_set_dfa(&up).unwrap();
        assert_eq!(decide(&fib, &x).unwrap(), DecisionVerdict::UltimatelyPeriodic { up });
    }
}

proptest! {
    #[test]
    fn round_trip(n in 0u64..1_000_000) {
        for (_, sys) in positional_fixtures() {
            let n = BigUint::from(n);
            let w = sys.greedy_rep(&n);
            prop_assert_eq!(sys.val(&w).unwrap(), n);
            prop_assert!(sys.language().accepts(&w));
        }
    }

    #[test]
    fn up_set_automata_accept_members(pre in "[01]{0,3}", per in "[01]{1,5}") {
        let fib = fibonacci();
        let up = UpSet::parse(&pre, &per).unwrap();
        let x = fib.up_set_dfa(&up).unwrap();
        for n in 0..300u64 {
            let w = fib.greedy_rep(&BigUint::from(n));
            prop_assert_eq!(x.accepts(&w), up.contains_u64(n));
        }
        let again = fib.up_set_dfa(&UpSet::new(up.preperiod().to_vec(), up.period().to_vec()).unwrap()).unwrap();
        prop_assert!(equivalent(&x, &again).unwrap().is_equal());
    }
}
