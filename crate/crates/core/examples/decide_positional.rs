//! Deciding ultimate periodicity for sets given by automata over Fibonacci
//! representations.

use numsys::automata::Dfa;
use numsys::positional::{bertrand_from_dbeta, compute_bounds, decide, BertrandSpec};
use numsys::upset::UpSet;

fn main() -> numsys::Result<()> {
    let fib = bertrand_from_dbeta(&BertrandSpec::new(vec![], vec![1, 0])?, 40)?;

    let evens = fib.up_set_dfa(&UpSet::parse("", "10")?)?;
    println!("even numbers: {}", decide(&fib, &evens)?);

    let odd_from_five = fib.up_set_dfa(&UpSet::parse("11001", "01")?)?;
    println!("{}", decide(&fib, &odd_from_five)?);

    let fibonacci_numbers = Dfa::new(Dfa::digit_alphabet(2), 2, 0, [1], [(0, 1, 1), (1, 0, 1)])?;
    println!("words 10*: {}", decide(&fib, &fibonacci_numbers)?);

    let ends_in_one = Dfa::new(Dfa::digit_alphabet(2), 3, 0, [1], [(0, 1, 1), (1, 0, 2), (2, 0, 2), (2, 1, 1)])?;
    println!("words ending in 1: {}", decide(&fib, &ends_in_one)?);

    let b = compute_bounds(&fib, 4)?;
    println!("bounds for 4 states: period <= {}, preperiod < {}", b.period_bound, b.preperiod_bound);
    Ok(())
}
