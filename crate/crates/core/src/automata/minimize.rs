use std::collections::{HashMap, VecDeque};

use super::Dfa;

const DEAD: u32 = u32::MAX;

impl Dfa {
    /// Minimal trim automaton for the same language.
    ///
    /// Dead and unreachable states are dropped (the transition function
    /// becomes partial) and states are renumbered by a breadth-first walk
    /// from the initial state following the alphabet order, so two
    /// minimized automata for the same language are structurally equal.
    /// The empty language is represented by a single non-final state.
    pub fn minimize(&self) -> Dfa {
        let acc = self.accessible();
        let co = self.coaccessible();
        if !co[self.initial] {
            return Dfa::from_parts(self.alphabet.clone(), 0, vec![false], vec![vec![None; self.alphabet.len()]]);
        }
        let sigma = self.alphabet.len();
        let mut new_index = vec![DEAD; self.state_count()];
        let live: Vec<usize> = (0..self.state_count()).filter(|&q| acc[q] && co[q]).collect();
        for (i, &q) in live.iter().enumerate() {
            new_index[q] = i as u32;
        }
        let succ: Vec<Vec<u32>> = live
            .iter()
            .map(|&q| (0..sigma).map(|a| self.delta[q][a].map_or(DEAD, |t| new_index[t])).collect())
            .collect();

        // Moore refinement, starting from the final / non-final split.
        let mut class: Vec<u32> = live.iter().map(|&q| u32::from(self.finals[q])).collect();
        let mut class_count = {
            let mut seen: Vec<u32> = class.clone();
            seen.sort_unstable();
            seen.dedup();
            seen.len()
        };
        loop {
            let mut ids: HashMap<Vec<u32>, u32> = HashMap::with_capacity(live.len());
            let mut next = Vec::with_capacity(live.len());
            for (i, row) in succ.iter().enumerate() {
                let mut sig = Vec::with_capacity(sigma + 1);
                sig.push(class[i]);
                sig.extend(row.iter().map(|&t| if t == DEAD { DEAD } else { class[t as usize] }));
                let fresh = ids.len() as u32;
                next.push(*ids.entry(sig).or_insert(fresh));
            }
            let refined = ids.len();
            class = next;
            if refined == class_count {
                break;
            }
            class_count = refined;
        }

        // Quotient with canonical breadth-first numbering.
        let mut representative = vec![usize::MAX; class_count];
        for (i, &c) in class.iter().enumerate() {
            if representative[c as usize] == usize::MAX {
                representative[c as usize] = i;
            }
        }
        let start_class = class[new_index[self.initial] as usize] as usize;
        let mut order = vec![usize::MAX; class_count];
        let mut queue = VecDeque::from([start_class]);
        order[start_class] = 0;
        let mut visited = vec![start_class];
        while let Some(c) = queue.pop_front() {
            let rep = representative[c];
            for &t in &succ[rep] {
                if t == DEAD {
                    continue;
                }
                let tc = class[t as usize] as usize;
                if order[tc] == usize::MAX {
                    order[tc] = visited.len();
                    visited.push(tc);
                    queue.push_back(tc);
                }
            }
        }
        let delta = visited
            .iter()
            .map(|&c| {
                succ[representative[c]]
                    .iter()
                    .map(|&t| (t != DEAD).then(|| order[class[t as usize] as usize]))
                    .collect()
            })
            .collect();
        let finals = visited.iter().map(|&c| self.finals[live[representative[c]]]).collect();
        Dfa::from_parts(self.alphabet.clone(), 0, finals, delta)
    }
}
