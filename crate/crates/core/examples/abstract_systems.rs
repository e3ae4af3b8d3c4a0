//! Abstract numeration systems: genealogical enumeration of a regular
//! language.

use num_bigint::BigUint;
use numsys::ans::AbstractSystem;
use numsys::automata::Dfa;

fn main() -> numsys::Result<()> {
    // {ε} ∪ {a, ab}* ∪ {c, cd}*
    let language = Dfa::with_symbols(
        ["a", "b", "c", "d"].map(String::from).to_vec(),
        5,
        0,
        0..5,
        [(0, "a", 1), (0, "c", 3), (1, "a", 1), (1, "b", 2), (2, "a", 1), (3, "c", 3), (3, "d", 4), (4, "c", 3)],
    )?;
    let s = AbstractSystem::new(&language)?;
    for n in 0..25u32 {
        let w = s.rep_s(&BigUint::from(n))?;
        let shown = if w.is_empty() { "ε".to_string() } else { s.format_word(&w) };
        print!("{n}:{shown} ");
    }
    println!();

    let w = s.parse_word("abab")?;
    println!("val(abab) = {}", s.val_s(&w)?);
    println!("rep(10^6) = {}", s.format_word(&s.rep_s(&BigUint::from(1_000_000u32))?));

    let report = s.hypothesis_check()?;
    let v: Vec<String> = report.table.v[s.language().initial()].iter().take(8).map(|x| x.to_string()).collect();
    println!("v_i: {}", v.join(", "));
    println!("{report}");
    Ok(())
}
