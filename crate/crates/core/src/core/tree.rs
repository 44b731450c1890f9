//! The generic AND-OR computation tree and its DOT export.

use std::fmt::Write as _;

/// How a node combines its children's truth values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connective {
    /// OR over children; with no children the node is false.
    Existential,
    /// AND over children; with no children the node is true.
    Universal,
    Leaf,
}

/// One node of a computation tree. Children are tagged with the edge
/// label of the move or measurement outcome that produced them.
#[derive(Debug, Clone)]
pub struct TreeNode {
    pub level: usize,
    pub label: String,
    pub connective: Connective,
    pub value: bool,
    pub children: Vec<(String, TreeNode)>,
}

impl TreeNode {
    pub fn leaf(level: usize, label: String, value: bool) -> Self {
        TreeNode {
            level,
            label,
            connective: Connective::Leaf,
            value,
            children: Vec::new(),
        }
    }

    /// Builds an inner node, computing its value from the children.
    pub fn inner(
        level: usize,
        label: String,
        connective: Connective,
        children: Vec<(String, TreeNode)>,
    ) -> Self {
        let value = match connective {
            Connective::Existential => children.iter().any(|(_, c)| c.value),
            Connective::Universal => children.iter().all(|(_, c)| c.value),
            Connective::Leaf => panic!("leaf node with children"),
        };
        TreeNode {
            level,
            label,
            connective,
            value,
            children,
        }
    }
}

/// An evaluated AND-OR tree rooted at level 0.
#[derive(Debug, Clone)]
pub struct ComputationTree {
    pub root: TreeNode,
}

impl ComputationTree {
    pub fn new(root: TreeNode) -> Self {
        debug_assert_eq!(root.level, 0);
        ComputationTree { root }
    }

    /// The root verdict.
    pub fn value(&self) -> bool {
        self.root.value
    }

    /// Recomputes every truth value bottom-up and checks it matches the
    /// stored one. Returns false on any mismatch or level gap.
    pub fn is_consistent(&self) -> bool {
        fn check(node: &TreeNode) -> bool {
            for (_, c) in &node.children {
                if c.level != node.level + 1 || !check(c) {
                    return false;
                }
            }
            let expect = match node.connective {
                Connective::Existential => node.children.iter().any(|(_, c)| c.value),
                Connective::Universal => node.children.iter().all(|(_, c)| c.value),
                Connective::Leaf => return node.children.is_empty() && true,
            };
            node.value == expect
        }
        self.root.level == 0 && check(&self.root)
    }
}

/// Renders a computation tree as a Graphviz digraph. Node shape encodes
/// the connective (diamond = ∨, box = ∧, ellipse = leaf), color encodes
/// the truth value, and edge labels carry the move labels or outcomes.
/// Output is deterministic: nodes are numbered in preorder.
pub fn export_tree_dot(tree: &ComputationTree) -> String {
    let mut out = String::new();
    out.push_str("digraph computation {\n");
    out.push_str("  rankdir=TB;\n");
    let mut next_id = 0usize;
    emit(&tree.root, &mut next_id, &mut out);
    out.push_str("}\n");
    return out;

    fn emit(node: &TreeNode, next_id: &mut usize, out: &mut String) -> usize {
        let id = *next_id;
        *next_id += 1;
        let shape = match node.connective {
            Connective::Existential => "diamond",
            Connective::Universal => "box",
            Connective::Leaf => "ellipse",
        };
        let color = if node.value { "green3" } else { "red3" };
        let glyph = match node.connective {
            Connective::Existential => "∨ ",
            Connective::Universal => "∧ ",
            Connective::Leaf => "",
        };
        writeln!(
            out,
            "  n{id} [label=\"{}{}\", shape={shape}, color={color}];",
            glyph,
            escape(&node.label)
        )
        .unwrap();
        for (edge, child) in &node.children {
            let child_id = emit(child, next_id, out);
            writeln!(out, "  n{id} -> n{child_id} [label=\"{}\"];", escape(edge)).unwrap();
        }
        id
    }

    fn escape(s: &str) -> String {
        s.replace('\\', "\\\\").replace('"', "\\\"")
    }
}
