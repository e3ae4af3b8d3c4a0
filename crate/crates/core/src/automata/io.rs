use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::Dfa;
use crate::error::Result;

/// JSON form of a [`Dfa`]; the order of `alphabet` is the symbol order.
///
/// ```json
/// {"alphabet":["0","1"],"states":2,"initial":0,"finals":[0,1],
///  "transitions":[[0,"1",1],[1,"0",0]]}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfaJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: usize,
    pub finals: Vec<usize>,
    pub transitions: Vec<(usize, String, usize)>,
}

impl DfaJson {
    pub fn to_dfa(&self) -> Result<Dfa> {
        Dfa::with_symbols(
            self.alphabet.clone(),
            self.states,
            self.initial,
            self.finals.iter().copied(),
            self.transitions.iter().map(|(q, s, t)| (*q, s.as_str(), *t)),
        )
    }
}

impl From<&Dfa> for DfaJson {
    fn from(d: &Dfa) -> Self {
        DfaJson {
            format: None,
            alphabet: d.alphabet.clone(),
            states: d.state_count(),
            initial: d.initial,
            finals: d.finals().collect(),
            transitions: d.transitions().map(|(q, a, t)| (q, d.alphabet[a].clone(), t)).collect(),
        }
    }
}

impl Dfa {
    pub fn from_json(text: &str) -> Result<Dfa> {
        let parsed: DfaJson = serde_json::from_str(text)?;
        parsed.to_dfa()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DfaJson::from(self)).expect("plain data serializes")
    }
}

pub(super) fn to_dot(d: &Dfa) -> String {
    let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n  start [shape=point];\n");
    for q in 0..d.state_count() {
        let shape = if d.is_final(q) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  q{q} [shape={shape}, label=\"{q}\"];");
    }
    let _ = writeln!(out, "  start -> q{};", d.initial);
    for q in 0..d.state_count() {
        // merge parallel edges into one labelled edge
        let mut targets: Vec<(usize, Vec<&str>)> = Vec::new();
        for (a, t) in d.delta[q].iter().enumerate() {
            let Some(t) = t else { continue };
            match targets.iter_mut().find(|(x, _)| x == t) {
                Some((_, labels)) => labels.push(&d.alphabet[a]),
                None => targets.push((*t, vec![&d.alphabet[a]])),
            }
        }
        for (t, labels) in targets {
            let _ = writeln!(out, "  q{q} -> q{t} [label=\"{}\"];", labels.join(","));
        }
    }
    out.push_str("}\n");
    out
}
