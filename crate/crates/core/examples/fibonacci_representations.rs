//! Greedy representations in the Fibonacci numeration system.

use num_bigint::BigUint;
use numsys::automata::Dfa;
use numsys::linrec::LinearRecurrence;
use numsys::positional::PositionalSystem;

fn main() -> numsys::Result<()> {
    let no_two_ones = Dfa::new(Dfa::digit_alphabet(2), 3, 0, [0, 1, 2], [(0, 1, 1), (1, 0, 2), (2, 0, 2), (2, 1, 1)])?;
    let fib = PositionalSystem::new(LinearRecurrence::from_i64(&[1, 1], &[1, 2])?, 2, &no_two_ones)?;

    let scale: Vec<String> = fib.scale(10).iter().map(|u| u.to_string()).collect();
    println!("scale: {}", scale.join(", "));
    for n in [0u32, 1, 7, 15, 100, 1000] {
        let word = fib.greedy_rep(&BigUint::from(n));
        let shown = if word.is_empty() { "ε".to_string() } else { fib.format_digits(&word) };
        println!("rep({n}) = {shown}");
    }
    let word = fib.parse_digits("101001")?;
    println!("val(101001) = {}", fib.val(&word)?);
    println!("val(0011) = {} (not greedy, still evaluated)", fib.val(&fib.parse_digits("0011")?)?);

    let report = fib.validate(12);
    println!("greedy words match the language up to length 12: {}", report.passed());
    Ok(())
}
