//! Automata for residue classes and ultimately periodic sets.

use num_bigint::BigUint;
use numsys::positional::{bertrand_from_dbeta, BertrandSpec};
use numsys::upset::UpSet;

fn main() -> numsys::Result<()> {
    let fib = bertrand_from_dbeta(&BertrandSpec::new(vec![], vec![1, 0])?, 40)?;
    for a in 2..=6 {
        let d = fib.congruence_dfa(a, 0)?;
        println!("val ≡ 0 mod {a}: {} states", d.state_count());
    }

    let up = UpSet::parse("1101", "001")?;
    let x = fib.up_set_dfa(&up)?;
    println!("{up}: {} states", x.state_count());
    let members: Vec<u32> = (0..30u32).filter(|&n| x.accepts(&fib.greedy_rep(&BigUint::from(n)))).collect();
    println!("members below 30: {members:?}");
    println!("{}", x.to_dot());
    Ok(())
}
