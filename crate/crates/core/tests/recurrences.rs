mod common;

use common::fixture;
use num_bigint::BigInt;
use num_integer::Integer;
use numsys::algebra::{cyclotomic_table, minimal_recurrence, IntPoly};
use numsys::io::{read_json, RecurrenceJson};
use numsys::linrec::{engstrom_index, n_growth_criterion, residue_profile, LinearRecurrence, PrimeVerdict};
use proptest::prelude::*;

fn load(name: &str) -> LinearRecurrence {
    read_json::<RecurrenceJson>(&fixture(name)).unwrap().to_recurrence().unwrap()
}

fn is_rotation(a: &[u64], b: &[u64]) -> bool {
    a.len() == b.len() && (0..a.len().max(1)).any(|s| a.iter().cycle().skip(s).take(a.len()).eq(b.iter()))
}

#[test]
fn five_term_example() {
    let r = load("five-term.json");
    assert_eq!(r.hankel_determinant(), BigInt::from(8458240));
    let v = n_growth_criterion(&r).unwrap();
    assert_eq!(v.primes.len(), 1);
    let (p, PrimeVerdict::Bounded { a, b }) = &v.primes[0] else { panic!("bounded expected: {v}") };
    assert_eq!(*p, 3);
    assert_eq!(*a, IntPoly::from_i64(&[1, 0, 0, 1]));
    assert_eq!(*b, IntPoly::from_i64(&[1, -6, -3]));
    let table: [(&[u64], usize); 5] = [
        (&[1, 0, 1, 2, 0, 2], 3),
        (&[4, 0, 1, 5, 0, 8], 5),
        (&[22, 9, 19, 5, 18, 8], 6),
        (&[49, 63, 19, 32, 18, 62], 6),
        (&[211, 225, 19, 32, 18, 224], 6),
    ];
    for (v, (period, n)) in table.iter().enumerate() {
        let profile = residue_profile(&r, 3u64.pow(v as u32 + 1));
        assert_eq!(profile.recurring_count, *n, "v = {}", v + 1);
        assert!(is_rotation(&profile.period_values, period), "v = {}: {:?}", v + 1, profile.period_values);
    }
}

#[test]
fn bounded_counts_stay_below_the_cyclotomic_order() {
    let r = load("five-term.json");
    for v in 1..=6 {
        assert!(residue_profile(&r, 3u64.pow(v)).recurring_count <= 6);
    }
}

#[test]
fn four_term_diverges() {
    let r = load("four-term.json");
    assert!(r.is_minimal());
    assert_eq!(r.reciprocal_poly(), IntPoly::from_i64(&[1, -3, -2, 0, -3]));
    let v = n_growth_criterion(&r).unwrap();
    assert_eq!(v.to_string(), "p=3: Divergent; overall: criterion satisfied");
    let counts: Vec<usize> = (1..=6).map(|v| residue_profile(&r, 3u64.pow(v)).recurring_count).collect();
    assert!(counts.windows(2).all(|w| w[0] <= w[1]), "{counts:?}");
    assert!(*counts.last().unwrap() > 10, "{counts:?}");
}

#[test]
fn u3_table_and_engstrom_bound() {
    let r = load("u3.json");
    let first: Vec<BigInt> = r.prefix(17);
    let expected = [1, 2, 3, 5, 9, 14, 24, 41, 66, 113, 189, 311, 528, 878, 1461, 2462, 4095];
    assert_eq!(first, expected.map(BigInt::from).to_vec());
    let p27 = residue_profile(&r, 27);
    assert_eq!(p27.preperiod_values, vec![1, 2, 3]);
    assert_eq!(p27.period_values, vec![5, 9, 14, 24, 14, 12, 5, 0, 14, 15, 14, 3, 5, 18, 14, 6, 14, 21]);
    let p81 = residue_profile(&r, 81);
    assert_eq!(p81.preperiod_values, vec![1, 2, 3, 5]);
    assert_eq!(&p81.period_values[..16], &[9, 14, 24, 41, 66, 32, 27, 68, 42, 68, 3, 32, 45, 41, 60, 14]);
    let p243 = residue_profile(&r, 243);
    assert_eq!(p243.preperiod_values, vec![1, 2, 3, 5, 9]);
    assert_eq!(&p243.period_values[..15], &[14, 24, 41, 66, 113, 189, 68, 42, 149, 3, 32, 207, 41, 60, 176]);
    assert_eq!(engstrom_index(&r, 3).unwrap(), Some(1));
    for v in 1..=8u32 {
        assert!(residue_profile(&r, 3u64.pow(v)).preperiod <= v as usize, "v = {v}");
    }
}

#[test]
fn engstrom_bound_on_fixtures() {
    for name in ["u3.json", "five-term.json", "four-term.json"] {
        let r = load(name);
        let Some(s) = engstrom_index(&r, 3).unwrap() else { continue };
        for v in 1..=8u32 {
            assert!(residue_profile(&r, 3u64.pow(v)).preperiod <= v as usize * s, "{name}, v = {v}");
        }
    }
}

#[test]
fn two_blocks_count_recurrence() {
    let v = [1, 3, 7, 13, 23, 39, 65, 107, 175, 285].map(BigInt::from);
    let fit = minimal_recurrence(&v, 5).unwrap().unwrap();
    assert_eq!(fit.integer_coeffs().unwrap(), [2, 0, -1].map(BigInt::from).to_vec());
}

#[test]
fn cyclotomic_products() {
    for n in 1..=30u64 {
        let table = cyclotomic_table(n);
        let product = (1..=n).filter(|d| n % d == 0).fold(IntPoly::one(), |acc, d| &acc * &table[d as usize - 1]);
        assert_eq!(product, IntPoly::x_pow_minus_one(n as usize), "n = {n}");
    }
}

fn recurrence() -> impl Strategy<Value = LinearRecurrence> {
    (1usize..=3)
        .prop_flat_map(|k| (prop::collection::vec(-4i64..=4, k), prop::collection::vec(0i64..=9, k), 1i64..=4))
        .prop_map(|(mut coeffs, initial, last)| {
            *coeffs.last_mut().unwrap() = last;
            LinearRecurrence::from_i64(&coeffs, &initial).unwrap()
        })
}

proptest! {
    #[test]
    fn recurring_count_bounds(r in recurrence(), m in 2u64..60) {
        let p = residue_profile(&r, m);
        prop_assert!(p.recurring_count <= p.period);
        prop_assert!((p.period as u128) <= (p.recurring_count as u128).pow(r.order() as u32).max(1));
        let checked = (p.preperiod + 2 * p.period).min(300);
        for (i, term) in r.terms().take(checked).enumerate() {
            prop_assert_eq!(BigInt::from(p.value_at(i)), term.mod_floor(&BigInt::from(m)));
        }
    }

    #[test]
    fn periods_multiply_over_coprime_moduli(r in recurrence(), a in 2u64..13, b in 2u64..13) {
        prop_assume!(a.gcd(&b) == 1);
        let pa = residue_profile(&r, a);
        let pb = residue_profile(&r, b);
        let pab = residue_profile(&r, a * b);
        prop_assert_eq!(pab.period, pa.period.lcm(&pb.period));
        prop_assert_eq!(pab.preperiod, pa.preperiod.max(pb.preperiod));
    }

    #[test]
    fn purely_periodic_when_prime_to_last_coefficient(r in recurrence(), m in 2u64..60) {
        let last = r.last_coeff().clone();
        prop_assume!(BigInt::from(m).gcd(&last) == BigInt::from(1));
        prop_assert_eq!(residue_profile(&r, m).preperiod, 0);
    }
}
