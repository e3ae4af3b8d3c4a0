//! Automata operations: minimization, products, equivalence, JSON and DOT.

use numsys::automata::{equivalent, Dfa, Equivalence};

fn main() -> numsys::Result<()> {
    let alphabet = Dfa::digit_alphabet(2);
    // words with an even number of 1s, with a redundant copy of each state
    let even = Dfa::new(alphabet.clone(), 4, 0, [0, 2], [(0, 0, 2), (0, 1, 1), (1, 0, 3), (1, 1, 0), (2, 0, 0), (2, 1, 3), (3, 0, 1), (3, 1, 2)])?;
    let min = even.minimize();
    println!("{} states, minimized to {}", even.state_count(), min.state_count());

    let ends_in_zero = Dfa::new(alphabet.clone(), 2, 0, [1], [(0, 0, 1), (0, 1, 0), (1, 0, 1), (1, 1, 0)])?;
    let both = min.intersect(&ends_in_zero)?;
    let first: Vec<String> = both.words().take(6).map(|w| both.format_word(&w)).collect();
    println!("even number of 1s and ending in 0: {}", first.join(" "));

    match equivalent(&min, &ends_in_zero)? {
        Equivalence::Equal => println!("equal"),
        Equivalence::Differ(w) => println!("smallest difference: '{}'", min.format_word(&w)),
    }

    let json = min.to_json();
    println!("{json}");
    assert_eq!(Dfa::from_json(&json)?, min);
    println!("{}", min.to_dot());
    Ok(())
}
