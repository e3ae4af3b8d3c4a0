mod common;

use common::fixture;
use numsys::hd0l::{build_presentation, decide_hd0l, fiber_dfa, Morphism, WordVerdict};
use numsys::io::{read_json, MorphismJson};
use numsys::search::SearchOptions;

fn morphisms() -> Vec<(&'static str, Morphism, Morphism, char)> {
    let mut out = Vec::new();
    for name in ["fibonacci-word.json", "ab-periodic.json", "constant.json", "thue-morse.json"] {
        let (f, g, a) = read_json::<MorphismJson>(&fixture(name)).unwrap().to_morphisms().unwrap();
        out.push((name, f, g, a));
    }
    let g = Morphism::parse([("a", "abb"), ("b", "b")]).unwrap();
    out.push(("ab^ω", Morphism::identity(['a', 'b']), g, 'a'));
    let g = Morphism::parse([("a", "ab"), ("b", "a")]).unwrap();
    out.push(("collapsed fibonacci", Morphism::parse([("a", "0"), ("b", "0")]).unwrap(), g, 'a'));
    let g = Morphism::parse([("a", "aba"), ("b", "bb")]).unwrap();
    out.push(("aba/bb", Morphism::identity(['a', 'b']), g, 'a'));
    out
}

/// Smallest `(preperiod, period)` with period at most 16 holding over
/// the whole prefix, preperiod below half of it.
fn scan(word: &[char]) -> Option<(usize, usize)> {
    (0..word.len() / 2)
        .flat_map(|pre| (1..=16).map(move |p| (pre, p)))
        .find(|&(pre, p)| (pre..word.len() - p).all(|i| word[i] == word[i + p]))
}

#[test]
fn presentations_reproduce_iteration() {
    for (name, f, g, a) in morphisms() {
        let pres = build_presentation(&f, &g, a).unwrap_or_else(|e| panic!("{name}: {e}"));
        let expected = g.fixed_point_prefix(a, 500).unwrap();
        for (i, w) in pres.system.language().words().take(500).enumerate() {
            let want = f.image(expected[i]).unwrap()[0].to_string();
            assert_eq!(pres.letter(&w), Some(want.as_str()), "{name}: letter {i}");
        }
    }
}

#[test]
fn fibers_partition_the_language() {
    for (name, f, g, a) in morphisms() {
        let pres = build_presentation(&f, &g, a).unwrap();
        let fibers: Vec<_> = pres.letters.iter().map(|b| fiber_dfa(&pres, b).unwrap()).collect();
        for w in pres.system.language().words().take(300) {
            assert_eq!(fibers.iter().filter(|x| x.accepts(&w)).count(), 1, "{name}");
        }
    }
}

#[test]
fn verdicts_agree_with_scan() {
    for (name, f, g, a) in morphisms() {
        let prefix: Vec<char> =
            g.fixed_point_prefix(a, 2000).unwrap().iter().map(|&c| f.image(c).unwrap()[0]).collect();
        let found = scan(&prefix);
        let verdict = decide_hd0l(&f, &g, a, SearchOptions::default()).unwrap();
        match (&verdict.overall, found) {
            (WordVerdict::UltimatelyPeriodic { preperiod, period }, Some((pre, p))) => {
                assert_eq!((*preperiod, *period), (pre, p), "{name}")
            }
            (WordVerdict::UltimatelyPeriodic { .. }, None) => panic!("{name}: no period in the prefix"),
            (WordVerdict::NotUltimatelyPeriodic, Some(found)) => panic!("{name}: prefix has period {found:?}"),
            _ => {}
        }
    }
}

#[test]
fn expected_verdicts() {
    let expected = [
        ("fibonacci-word.json", Some(WordVerdict::NotUltimatelyPeriodic)),
        ("ab-periodic.json", Some(WordVerdict::UltimatelyPeriodic { preperiod: 0, period: 2 })),
        ("constant.json", Some(WordVerdict::UltimatelyPeriodic { preperiod: 0, period: 1 })),
        ("ab^ω", Some(WordVerdict::UltimatelyPeriodic { preperiod: 1, period: 1 })),
        ("collapsed fibonacci", Some(WordVerdict::UltimatelyPeriodic { preperiod: 0, period: 1 })),
        ("thue-morse.json", None),
    ];
    let all = morphisms();
    for (name, want) in expected {
        let (_, f, g, a) = all.iter().find(|m| m.0 == name).unwrap();
        let got = decide_hd0l(f, g, *a, SearchOptions::default()).unwrap().overall;
        match want {
            Some(w) => assert_eq!(got, w, "{name}"),
            None => assert!(matches!(got, WordVerdict::Inapplicable { .. }), "{name}: {got:?}"),
        }
    }
}
