//! The asynchronous state portrait: every state is a node annotated with its
//! excited-coordinate mask, and an arrow leads to each state reachable by
//! one masked update touching only excited coordinates. Stable states have
//! no outgoing arrows; self-loops are never drawn.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::state::State;
use crate::table::TruthTable;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PortraitNode {
    pub state: State,
    pub excited: State,
}

/// Nodes and edges in canonical index order, so rendering is deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PortraitGraph {
    n: u8,
    nodes: Vec<PortraitNode>,
    edges: Vec<(State, State)>,
}

impl PortraitGraph {
    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn nodes(&self) -> &[PortraitNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(State, State)] {
        &self.edges
    }

    pub fn has_edge(&self, from: &State, to: &State) -> bool {
        self.edges.binary_search(&(*from, *to)).is_ok()
    }

    pub fn outgoing(&self, from: &State) -> impl Iterator<Item = State> + '_ {
        let from = *from;
        self.edges
            .iter()
            .filter(move |(src, _)| *src == from)
            .map(|(_, dst)| *dst)
    }

    /// DOT digraph; byte-identical across runs for the same input. Node
    /// labels carry the bit string with a `*` after each excited coordinate
    /// and a second line with the raw mask.
    pub fn render_dot(&self) -> String {
        let mut out = String::from("digraph portrait {\n");
        for node in &self.nodes {
            let mut marked = String::new();
            for (i, bit) in node.state.bits().enumerate() {
                marked.push(if bit { '1' } else { '0' });
                if node.excited.bit(i) {
                    marked.push('*');
                }
            }
            out.push_str(&format!(
                "  \"{}\" [label=\"{}\\nexc={}\"];\n",
                node.state, marked, node.excited
            ));
        }
        for (from, to) in &self.edges {
            out.push_str(&format!("  \"{from}\" -> \"{to}\";\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nodes": self
                .nodes
                .iter()
                .map(|node| json!({
                    "state": node.state.bit_string(),
                    "excited": node.excited.bit_string(),
                }))
                .collect::<Vec<_>>(),
            "edges": self
                .edges
                .iter()
                .map(|(from, to)| json!([from.bit_string(), to.bit_string()]))
                .collect::<Vec<_>>(),
        })
    }
}

/// Builds the portrait of `phi`. There is an edge `μ → μ′` exactly when some
/// nonzero sub-mask of the excited set sends `μ` to `μ′ ≠ μ`.
pub fn build_portrait(phi: &TruthTable) -> PortraitGraph {
    let n = phi.dim();
    let mut nodes = Vec::with_capacity(phi.size());
    let mut edges = BTreeSet::new();
    for mu in State::all(n) {
        let excited = phi.excited(&mu).expect("dimensions agree");
        nodes.push(PortraitNode { state: mu, excited });
        // walk the nonzero sub-masks of the excited set
        let full = excited.index();
        let mut sub = full;
        while sub != 0 {
            let nu = State::new(n, sub).expect("sub-mask in range");
            let target = phi.nu_apply(&nu, &mu).expect("dimensions agree");
            debug_assert_ne!(target, mu);
            edges.insert((mu, target));
            sub = (sub - 1) & full;
        }
    }
    PortraitGraph {
        n: n as u8,
        nodes,
        edges: edges.into_iter().collect(),
    }
}
