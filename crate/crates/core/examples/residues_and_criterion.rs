//! Residues of linear recurrences and the growth criterion for N_U(m).

use numsys::linrec::{engstrom_index, n_growth_criterion, residue_profile, LinearRecurrence};

fn main() -> numsys::Result<()> {
    let u3 = LinearRecurrence::from_i64(&[0, 1, 3], &[1, 2, 3])?;
    println!("U_(i+3) = U_(i+1) + 3 U_i");
    for v in 1..=5u32 {
        let p = residue_profile(&u3, 3u64.pow(v));
        println!(
            "  mod 3^{v}: preperiod {:?}, period length {}, N = {}",
            p.preperiod_values, p.period, p.recurring_count
        );
    }
    println!("  s(3) = {:?}", engstrom_index(&u3, 3)?);

    let five = LinearRecurrence::from_i64(&[6, 3, -1, 6, 3], &[1, 2, 3, 4, 5])?;
    println!("five-term recurrence: Hankel determinant {}", five.hankel_determinant());
    println!("  {}", n_growth_criterion(&five)?);
    let counts: Vec<usize> = (1..=6).map(|v| residue_profile(&five, 3u64.pow(v)).recurring_count).collect();
    println!("  N(3^v) for v = 1..6: {counts:?}");

    let four = LinearRecurrence::from_i64(&[3, 2, 0, 3], &[1, 2, 3, 4])?;
    println!("four-term recurrence: P_U = {}", four.reciprocal_poly());
    println!("  {}", n_growth_criterion(&four.minimized()?)?);
    let counts: Vec<usize> = (1..=6).map(|v| residue_profile(&four, 3u64.pow(v)).recurring_count).collect();
    println!("  N(3^v) for v = 1..6: {counts:?}");
    Ok(())
}
