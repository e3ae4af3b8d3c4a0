//! Positional systems built from the expansion of 1 in base β.

use numsys::positional::{bertrand_from_dbeta, BertrandSpec};

fn main() -> numsys::Result<()> {
    let cases: [(&str, Vec<u32>, Vec<u32>); 4] = [
        ("golden ratio", vec![], vec![1, 0]),
        ("tribonacci", vec![], vec![1, 1, 0]),
        ("t = (2 1)^ω", vec![], vec![2, 1]),
        ("t = 3 (1)^ω", vec![3], vec![1]),
    ];
    for (name, preperiod, period) in cases {
        let sys = bertrand_from_dbeta(&BertrandSpec::new(preperiod, period)?, 40)?;
        let scale: Vec<String> = sys.scale(8).iter().map(|u| u.to_string()).collect();
        println!("{name}");
        println!("  recurrence: {}", sys.recurrence());
        println!("  scale: {}", scale.join(", "));
        println!("  language states: {}", sys.language().state_count());
        println!("  valid to depth 10: {}", sys.validate(10).passed());
    }
    Ok(())
}
