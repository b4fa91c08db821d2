//! Breadth-first growth of legal words built from aba and baaba.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::legality::{is_legal_factor, BoundedFactor};
use crate::turtle::line::{key_string, zero_excursions, Structure};
use crate::word::Word;

pub const FACTORS: [&str; 2] = ["aba", "baaba"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthNode {
    pub word: Word,
    pub depth: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    /// Legal one-factor extensions, whether or not they fit the budget.
    pub legal_extensions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthChart {
    pub max_tiles: usize,
    pub max_word_len: usize,
    pub nodes: Vec<GrowthNode>,
    /// Distinct closed zero excursions with fewer than `max_tiles` tiles, over all nodes.
    pub structures: Vec<Structure>,
}

impl GrowthChart {
    pub fn branch_points(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].legal_extensions == 2).collect()
    }
}

/// Nodes are grown while their word has at most 2·max_tiles letters, which
/// leaves room for an excursion of max_tiles tiles to close.
pub fn growth_chart(max_tiles: usize, identify_reversal: bool) -> GrowthChart {
    assert!(max_tiles >= 3, "growth_chart needs max_tiles ≥ 3");
    let max_word_len = 2 * max_tiles;
    let mut nodes = vec![GrowthNode { word: Word::new("aba"), depth: 0, parent: None, children: vec![], legal_extensions: 0 }];
    let mut found: BTreeMap<String, Structure> = BTreeMap::new();
    let mut i = 0;
    while i < nodes.len() {
        let w = nodes[i].word.clone();
        let rep = zero_excursions(&w, identify_reversal).unwrap();
        for e in rep.excursions.iter().filter(|e| e.closed && e.tiles() < max_tiles) {
            let k = key_string(&e.key);
            found
                .entry(k.clone())
                .or_insert_with(|| Structure { key: k, tiles: e.tiles(), occurrences: 0, first_start: e.start })
                .occurrences += 1;
        }
        for f in FACTORS {
            let c = w.concat(&Word::new(f));
            if !is_legal_factor(&BoundedFactor::open(c.clone())) {
                continue;
            }
            nodes[i].legal_extensions += 1;
            if c.len() <= max_word_len {
                let id = nodes.len();
                nodes.push(GrowthNode { word: c, depth: nodes[i].depth + 1, parent: Some(i), children: vec![], legal_extensions: 0 });
                nodes[i].children.push(id);
            }
        }
        i += 1;
    }
    let mut structures: Vec<Structure> = found.into_values().collect();
    structures.sort_by(|a, b| a.tiles.cmp(&b.tiles).then_with(|| a.key.cmp(&b.key)));
    GrowthChart { max_tiles, max_word_len, nodes, structures }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_node_extends() {
        let g = growth_chart(12, false);
        assert!(g.nodes.iter().all(|n| n.legal_extensions >= 1));
        assert!(g.branch_points().contains(&0));
        assert!(g.nodes.iter().all(|n| is_legal_factor(&BoundedFactor::open(n.word.clone()))));
    }
}
