//! Grow legal words by aba / baaba steps and catalogue the structures found.

use fibword::turtle::growth_chart;

fn main() {
    let g = growth_chart(30, false);
    println!("{} nodes, word length bound {}", g.nodes.len(), g.max_word_len);
    for (i, n) in g.nodes.iter().take(12).enumerate() {
        println!("  #{i:<3} depth {} children {:?} {}", n.depth, n.children, n.word);
    }
    println!("branch points: {:?}", &g.branch_points()[..6]);
    for s in &g.structures {
        println!("structure of {:>2} tiles: {}", s.tiles, s.key);
    }
}
