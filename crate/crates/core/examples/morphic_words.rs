//! Ultimate periodicity of words generated by iterating a morphism.

use numsys::hd0l::{build_presentation, decide_hd0l, Morphism};
use numsys::search::SearchOptions;

fn main() -> numsys::Result<()> {
    let cases = [
        ("Fibonacci word", vec![("a", "ab"), ("b", "a")]),
        ("(ab)^ω", vec![("a", "ab"), ("b", "ab")]),
        ("a^ω", vec![("a", "aa")]),
        ("ab^ω", vec![("a", "abb"), ("b", "b")]),
        ("Thue-Morse word", vec![("a", "ab"), ("b", "ba")]),
    ];
    for (name, rules) in cases {
        let g = Morphism::parse(rules)?;
        let f = Morphism::identity(g.domain());
        let prefix: String = g.fixed_point_prefix('a', 20)?.into_iter().collect();
        println!("{name}: {prefix}...");
        let pres = build_presentation(&f, &g, 'a')?;
        println!("  language states: {}", pres.system.state_count());
        for line in decide_hd0l(&f, &g, 'a', SearchOptions::default())?.to_string().lines() {
            println!("  {line}");
        }
    }
    Ok(())
}
