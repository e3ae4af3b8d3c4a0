//! Deciding ultimate periodicity in an abstract numeration system.

use numsys::ans::{compute_bounds_ans, decide_ans, AbstractSystem};
use numsys::automata::Dfa;
use numsys::upset::UpSet;

fn main() -> numsys::Result<()> {
    let language = Dfa::with_symbols(
        ["a", "b", "c", "d"].map(String::from).to_vec(),
        5,
        0,
        0..5,
        [(0, "a", 1), (0, "c", 3), (1, "a", 1), (1, "b", 2), (2, "a", 1), (3, "c", 3), (3, "d", 4), (4, "c", 3)],
    )?;
    let s = AbstractSystem::new(&language)?;

    for (pre, per) in [("", "100"), ("01", "0001"), ("", "110101")] {
        let x = s.up_set_dfa(&UpSet::parse(pre, per)?)?;
        println!("{} states: {}", x.state_count(), decide_ans(&s, &x)?);
    }

    let a_star = Dfa::with_symbols(s.language().alphabet().to_vec(), 1, 0, [0], [(0, "a", 0)])?;
    println!("words a*: {}", decide_ans(&s, &a_star)?);

    let b = compute_bounds_ans(&s, 1)?;
    println!("bounds for 1 state: T = {}, preperiod < {}", b.t, b.preperiod_bound);
    Ok(())
}
