//! Brute-force count of w-trees: rooted trees with labeled trivalent
//! internal vertices whose three half-edges carry the marks `a`, `b`, `c`,
//! and whose root keeps one half-edge unmatched.
//!
//! Every plane drawing (binary tree shape, vertex labels, and an assignment
//! of marks to the up/left/right half-edges of each vertex) is generated and
//! reduced to a canonical code in which the two children of each vertex are
//! listed in the order of the marks on the half-edges joining them. Swapping
//! children does not change the code, so distinct codes are distinct
//! w-trees.

use std::collections::HashSet;

use super::OracleError;

/// Largest number of internal vertices accepted by [`enumerate_w_trees`].
pub const W_TREE_BOUND: u32 = 5;

/// The six bijections from (up, left, right) to the marks `a=0, b=1, c=2`.
const MARKINGS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

#[derive(Clone, Copy, Debug)]
enum Node {
    Leaf,
    Internal { left: usize, right: usize },
}

/// A plane binary tree stored in preorder; internal vertices are numbered
/// `0..n` in preorder through `internal_index`.
#[derive(Clone, Debug)]
struct Shape {
    nodes: Vec<Node>,
    internal_index: Vec<usize>,
}

fn shapes(n: u32) -> Vec<Shape> {
    fn build(n: u32) -> Vec<Vec<Node>> {
        if n == 0 {
            return vec![vec![Node::Leaf]];
        }
        let mut out = Vec::new();
        for k in 0..n {
            for left in build(k) {
                for right in build(n - 1 - k) {
                    let mut nodes = Vec::with_capacity(left.len() + right.len() + 1);
                    let offset_left = 1;
                    let offset_right = 1 + left.len();
                    nodes.push(Node::Internal {
                        left: offset_left,
                        right: offset_right,
                    });
                    for (offset, part) in [(offset_left, &left), (offset_right, &right)] {
                        nodes.extend(part.iter().map(|node| match *node {
                            Node::Leaf => Node::Leaf,
                            Node::Internal { left, right } => Node::Internal {
                                left: left + offset,
                                right: right + offset,
                            },
                        }));
                    }
                    out.push(nodes);
                }
            }
        }
        out
    }
    build(n)
        .into_iter()
        .map(|nodes| {
            let mut internal_index = vec![usize::MAX; nodes.len()];
            let mut next = 0;
            for (i, node) in nodes.iter().enumerate() {
                if matches!(node, Node::Internal { .. }) {
                    internal_index[i] = next;
                    next += 1;
                }
            }
            Shape { nodes, internal_index }
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, (n - 1) as u8);
            out.push(q);
        }
    }
    out
}

/// Packs the preorder token sequence into a `u64`, four bits per token:
/// 0 for a leaf, `1 + 3 * label + up_mark` for an internal vertex.
fn canonical_code(shape: &Shape, labels: &[u8], marks: &[[u8; 3]]) -> u64 {
    fn emit(shape: &Shape, labels: &[u8], marks: &[[u8; 3]], node: usize, code: &mut u64) {
        match shape.nodes[node] {
            Node::Leaf => *code <<= 4,
            Node::Internal { left, right } => {
                let v = shape.internal_index[node];
                let [up, ml, mr] = marks[v];
                *code = (*code << 4) | (1 + 3 * labels[v] as u64 + up as u64);
                let (first, second) = if ml < mr { (left, right) } else { (right, left) };
                emit(shape, labels, marks, first, code);
                emit(shape, labels, marks, second, code);
            }
        }
    }
    let mut code = 0;
    emit(shape, labels, marks, 0, &mut code);
    code
}

/// Counts of drawings and of distinct w-trees with `n` internal vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WTreeCensus {
    pub drawings: u64,
    pub distinct: u64,
}

pub fn w_tree_census(n: u32) -> Result<WTreeCensus, OracleError> {
    if n > W_TREE_BOUND {
        return Err(OracleError::BoundExceeded { n, bound: W_TREE_BOUND });
    }
    let labelings = permutations(n as usize);
    let marking_count = 6usize.pow(n);
    let mut seen = HashSet::new();
    let mut drawings = 0u64;
    let mut marks = vec![[0u8; 3]; n as usize];
    for shape in shapes(n) {
        for labels in &labelings {
            for index in 0..marking_count {
                let mut rest = index;
                for m in marks.iter_mut() {
                    *m = MARKINGS[rest % 6];
                    rest /= 6;
                }
                seen.insert(canonical_code(&shape, labels, &marks));
                drawings += 1;
            }
        }
    }
    Ok(WTreeCensus {
        drawings,
        distinct: seen.len() as u64,
    })
}

/// Number of w-trees with `n` internal vertices.
pub fn enumerate_w_trees(n: u32) -> Result<u64, OracleError> {
    Ok(w_tree_census(n)?.distinct)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_counts_are_catalan() {
        let counts: Vec<usize> = (0..=5).map(|n| shapes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_w_trees(0).unwrap(), 1);
        assert_eq!(enumerate_w_trees(1).unwrap(), 3);
        assert_eq!(enumerate_w_trees(2).unwrap(), 36);
        assert_eq!(enumerate_w_trees(3).unwrap(), 810);
    }

    /// Every tree has exactly `2^n` drawings.
    #[test]
    fn drawings_quotient() {
        for n in 0..=3 {
            let c = w_tree_census(n).unwrap();
            assert_eq!(c.drawings, c.distinct << n);
        }
    }

    #[test]
    fn bound() {
        assert!(matches!(
            enumerate_w_trees(W_TREE_BOUND + 1),
            Err(OracleError::BoundExceeded { .. })
        ));
    }
}
