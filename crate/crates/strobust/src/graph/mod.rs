//! Immutable DAG values with designated input/output lists.
//!
//! Nodes are dense indices `0..n_nodes` and the index order is a topological
//! order: every edge satisfies `src < dst`. That invariant is established at
//! construction time and makes depth / profile / reachability sweeps single
//! linear passes. All operations are pure; an [`IoDag`] never changes after
//! construction and is safe to share across threads.

mod text;

use crate::bits::Bits;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense node index, valid for exactly one graph.
pub type NodeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("node {id} out of range for graph with {n} nodes")]
    NodeOutOfRange { id: NodeId, n: usize },
    #[error("edge ({src}, {dst}) violates topological index order (need src < dst)")]
    NotTopological { src: NodeId, dst: NodeId },
    #[error("duplicate edge ({src}, {dst})")]
    DuplicateEdge { src: NodeId, dst: NodeId },
    #[error("duplicate terminal node {id} in {list}")]
    DuplicateTerminal { id: NodeId, list: &'static str },
    #[error("edge index {index} out of range for graph with {m} edges")]
    EdgeIndexOutOfRange { index: usize, m: usize },
    #[error("duplicate member {member} in removal set")]
    DuplicateMember { member: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Immutable DAG with ordered input and output node lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IoDag {
    n_nodes: usize,
    edges: Vec<(NodeId, NodeId)>,
    inputs: Vec<NodeId>,
    outputs: Vec<NodeId>,
    label: String,
    succ: Vec<Vec<NodeId>>,
    pred: Vec<Vec<NodeId>>,
}

impl IoDag {
    /// Builds a graph, validating every structural invariant: indices in
    /// range, `src < dst` on every edge (which forbids self loops and cycles),
    /// no duplicate edges, duplicate-free terminal lists.
    pub fn new(
        n_nodes: usize,
        mut edges: Vec<(NodeId, NodeId)>,
        inputs: Vec<NodeId>,
        outputs: Vec<NodeId>,
        label: impl Into<String>,
    ) -> Result<Self, GraphError> {
        for &(u, v) in &edges {
            if u >= n_nodes {
                return Err(GraphError::NodeOutOfRange { id: u, n: n_nodes });
            }
            if v >= n_nodes {
                return Err(GraphError::NodeOutOfRange { id: v, n: n_nodes });
            }
            if u >= v {
                return Err(GraphError::NotTopological { src: u, dst: v });
            }
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge {
                    src: w[0].0,
                    dst: w[0].1,
                });
            }
        }
        for (list, name) in [(&inputs, "inputs"), (&outputs, "outputs")] {
            let mut seen = Bits::new(n_nodes.max(1));
            for &id in list.iter() {
                if id >= n_nodes {
                    return Err(GraphError::NodeOutOfRange { id, n: n_nodes });
                }
                if seen.get(id) {
                    return Err(GraphError::DuplicateTerminal { id, list: name });
                }
                seen.set(id);
            }
        }
        let mut succ = vec![Vec::new(); n_nodes];
        let mut pred = vec![Vec::new(); n_nodes];
        for &(u, v) in &edges {
            succ[u].push(v);
            pred[v].push(u);
        }
        // `edges` is sorted, so succ lists come out sorted; sort pred too.
        pred.iter_mut().for_each(|p| p.sort_unstable());
        Ok(IoDag {
            n_nodes,
            edges,
            inputs,
            outputs,
            label: label.into(),
            succ,
            pred,
        })
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edge list, sorted lexicographically (the canonical order used for
    /// edge indices, serialization, and codec bitvectors).
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn inputs(&self) -> &[NodeId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[NodeId] {
        &self.outputs
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn successors(&self, v: NodeId) -> &[NodeId] {
        &self.succ[v]
    }

    pub fn predecessors(&self, v: NodeId) -> &[NodeId] {
        &self.pred[v]
    }

    pub fn indegree(&self, v: NodeId) -> usize {
        self.pred[v].len()
    }

    pub fn outdegree(&self, v: NodeId) -> usize {
        self.succ[v].len()
    }

    pub fn max_indegree(&self) -> usize {
        (0..self.n_nodes).map(|v| self.indegree(v)).max().unwrap_or(0)
    }

    /// Position of edge `(u, v)` in the canonical edge order.
    pub fn edge_index(&self, u: NodeId, v: NodeId) -> Option<usize> {
        self.edges.binary_search(&(u, v)).ok()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Nodes with indegree 0 (on this graph as constructed).
    pub fn sources(&self) -> Vec<NodeId> {
        (0..self.n_nodes).filter(|&v| self.pred[v].is_empty()).collect()
    }

    /// Nodes with outdegree 0.
    pub fn sinks(&self) -> Vec<NodeId> {
        (0..self.n_nodes).filter(|&v| self.succ[v].is_empty()).collect()
    }

    /// Returns a copy with a different label; structure unchanged.
    pub fn relabel(&self, label: impl Into<String>) -> IoDag {
        let mut g = self.clone();
        g.label = label.into();
        g
    }

    /// Removes the named nodes (with all incident edges) or the named edges.
    /// Returns the surviving graph together with a remap table: entry `v` of
    /// the table is the new index of old node `v`, or `None` if deleted.
    /// Input/output lists are filtered to survivors, order preserved.
    pub fn delete(&self, s: &RemovalSet) -> Result<(IoDag, Vec<Option<NodeId>>), GraphError> {
        s.validate_for(self)?;
        match s {
            RemovalSet::Nodes(nodes) => {
                let removed = Bits::from_indices(self.n_nodes.max(1), nodes);
                let mut remap = vec![None; self.n_nodes];
                let mut next = 0;
                for v in 0..self.n_nodes {
                    if !removed.get(v) {
                        remap[v] = Some(next);
                        next += 1;
                    }
                }
                let edges = self
                    .edges
                    .iter()
                    .filter_map(|&(u, v)| Some((remap[u]?, remap[v]?)))
                    .collect();
                let inputs = self.inputs.iter().filter_map(|&v| remap[v]).collect();
                let outputs = self.outputs.iter().filter_map(|&v| remap[v]).collect();
                let g = IoDag::new(next, edges, inputs, outputs, self.label.clone())?;
                Ok((g, remap))
            }
            RemovalSet::Edges(idxs) => {
                let removed = Bits::from_indices(self.edges.len().max(1), idxs);
                let edges = self
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !removed.get(*i))
                    .map(|(_, &e)| e)
                    .collect();
                let g = IoDag::new(
                    self.n_nodes,
                    edges,
                    self.inputs.clone(),
                    self.outputs.clone(),
                    self.label.clone(),
                )?;
                let remap = (0..self.n_nodes).map(Some).collect();
                Ok((g, remap))
            }
        }
    }

    /// Length in edges of the longest directed path; 0 for edgeless graphs.
    pub fn depth(&self) -> usize {
        self.depth_masked(&Bits::new(self.n_nodes.max(1)))
    }

    /// `depth` of the graph with `removed` nodes masked out, without
    /// rebuilding the graph. Must agree with `delete` + `depth`.
    pub fn depth_masked(&self, removed: &Bits) -> usize {
        let mut best = 0;
        let mut dist = vec![0usize; self.n_nodes];
        for v in 0..self.n_nodes {
            if removed.get(v) {
                continue;
            }
            let mut d = 0;
            for &u in &self.pred[v] {
                if !removed.get(u) {
                    d = d.max(dist[u] + 1);
                }
            }
            dist[v] = d;
            best = best.max(d);
        }
        best
    }

    /// `depth` with a set of edges (by canonical index) masked out.
    pub fn depth_edges_masked(&self, removed_edges: &Bits) -> usize {
        let mut best = 0;
        let mut dist = vec![0usize; self.n_nodes];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if removed_edges.get(i) {
                continue;
            }
            // Edges are sorted by (u, v) and u < v, so dist[u] is final
            // before any edge out of u is scanned.
            if dist[u] + 1 > dist[v] {
                dist[v] = dist[u] + 1;
                best = best.max(dist[v]);
            }
        }
        best
    }

    /// For every node, the length in edges of the longest path ending at it.
    pub fn node_depth_profile(&self) -> Vec<usize> {
        self.profile_masked(&Bits::new(self.n_nodes.max(1)))
    }

    /// Depth profile with removed nodes masked out; entries for removed
    /// nodes are meaningless (callers must skip them).
    pub fn profile_masked(&self, removed: &Bits) -> Vec<usize> {
        let mut dist = vec![0usize; self.n_nodes];
        for v in 0..self.n_nodes {
            if removed.get(v) {
                continue;
            }
            for &u in &self.pred[v] {
                if !removed.get(u) {
                    dist[v] = dist[v].max(dist[u] + 1);
                }
            }
        }
        dist
    }

    /// Reachability matrix restricted to inputs x outputs: entry `(i, j)` is
    /// true iff a directed path (possibly empty) runs from `inputs[i]` to
    /// `outputs[j]`.
    pub fn reach_matrix(&self) -> Vec<Vec<bool>> {
        let mask = Bits::new(self.n_nodes.max(1));
        self.inputs
            .iter()
            .map(|&a| {
                let r = self.reach_from_masked(a, &mask);
                self.outputs.iter().map(|&b| r.get(b)).collect()
            })
            .collect()
    }

    /// Set of nodes reachable from `src` (including `src`), ignoring removed
    /// nodes. Returns the empty set if `src` itself is removed.
    pub fn reach_from_masked(&self, src: NodeId, removed: &Bits) -> Bits {
        let mut reach = Bits::new(self.n_nodes.max(1));
        if removed.get(src) {
            return reach;
        }
        reach.set(src);
        for v in src..self.n_nodes {
            if !reach.get(v) {
                continue;
            }
            for &w in &self.succ[v] {
                if !removed.get(w) {
                    reach.set(w);
                }
            }
        }
        reach
    }

    /// Longest-path distances from `src` to every node in the masked graph;
    /// `None` where unreachable. `dist[src] = Some(0)`.
    pub fn longest_from_masked(&self, src: NodeId, removed: &Bits) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n_nodes];
        if removed.get(src) {
            return dist;
        }
        dist[src] = Some(0);
        for v in src..self.n_nodes {
            let Some(d) = dist[v] else { continue };
            for &w in &self.succ[v] {
                if removed.get(w) {
                    continue;
                }
                if dist[w].map_or(true, |old| old < d + 1) {
                    dist[w] = Some(d + 1);
                }
            }
        }
        dist
    }

    /// Exact longest path length in edges from `s` to `t`, or `None` when
    /// `t` is unreachable from `s`. A node reaches itself with length 0.
    pub fn pairwise_longest(&self, s: NodeId, t: NodeId) -> Option<usize> {
        self.longest_from_masked(s, &Bits::new(self.n_nodes.max(1)))[t]
    }
}

/// A set of nodes or edges to delete: the universal adversary object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RemovalSet {
    /// Node ids, sorted and duplicate-free.
    Nodes(Vec<NodeId>),
    /// Canonical edge indices, sorted and duplicate-free.
    Edges(Vec<usize>),
}

impl RemovalSet {
    pub fn nodes(members: impl IntoIterator<Item = NodeId>) -> Result<Self, GraphError> {
        Ok(RemovalSet::Nodes(Self::sorted_unique(members)?))
    }

    pub fn edges(members: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        Ok(RemovalSet::Edges(Self::sorted_unique(members)?))
    }

    /// Convenience: build an edge removal set from `(src, dst)` pairs.
    pub fn edge_pairs(
        g: &IoDag,
        pairs: impl IntoIterator<Item = (NodeId, NodeId)>,
    ) -> Result<Self, GraphError> {
        let mut idxs = Vec::new();
        for (u, v) in pairs {
            let i = g
                .edge_index(u, v)
                .ok_or(GraphError::NotTopological { src: u, dst: v })?;
            idxs.push(i);
        }
        Self::edges(idxs)
    }

    pub fn empty_nodes() -> Self {
        RemovalSet::Nodes(Vec::new())
    }

    fn sorted_unique(members: impl IntoIterator<Item = usize>) -> Result<Vec<usize>, GraphError> {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateMember { member: w[0] });
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        match self {
            RemovalSet::Nodes(v) => v.len(),
            RemovalSet::Edges(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn validate_for(&self, g: &IoDag) -> Result<(), GraphError> {
        match self {
            RemovalSet::Nodes(v) => {
                for &id in v {
                    if id >= g.n_nodes() {
                        return Err(GraphError::NodeOutOfRange { id, n: g.n_nodes() });
                    }
                }
            }
            RemovalSet::Edges(v) => {
                for &index in v {
                    if index >= g.n_edges() {
                        return Err(GraphError::EdgeIndexOutOfRange {
                            index,
                            m: g.n_edges(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Node-kind removal sets as a mask over `g`'s nodes.
    pub fn node_mask(&self, g: &IoDag) -> Option<Bits> {
        match self {
            RemovalSet::Nodes(v) => Some(Bits::from_indices(g.n_nodes().max(1), v)),
            RemovalSet::Edges(_) => None,
        }
    }
}

/// A concrete directed path, stored as its node sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRec {
    pub nodes: Vec<NodeId>,
}

impl PathRec {
    pub fn new(nodes: Vec<NodeId>) -> Self {
        PathRec { nodes }
    }

    /// Length in edges: one less than the node count.
    pub fn len_edges(&self) -> usize {
        self.nodes.len().saturating_sub(1)
    }

    /// Checks the path is simple and every consecutive pair is an edge of
    /// `g`; with `removed` given, also that no node of the path is removed.
    pub fn validate(&self, g: &IoDag, removed: Option<&Bits>) -> bool {
        let mut seen = Bits::new(g.n_nodes().max(1));
        for (i, &v) in self.nodes.iter().enumerate() {
            if v >= g.n_nodes() || seen.get(v) {
                return false;
            }
            if let Some(r) = removed {
                if r.get(v) {
                    return false;
                }
            }
            seen.set(v);
            if i > 0 && !g.has_edge(self.nodes[i - 1], v) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn chain(n: usize) -> IoDag {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        IoDag::new(n, edges, vec![0], vec![n - 1], format!("chain({n})")).unwrap()
    }

    pub(crate) fn complete_dag(n: usize) -> IoDag {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        IoDag::new(n, edges, vec![0], vec![n - 1], format!("K{n}")).unwrap()
    }

    #[test]
    fn construction_rejects_invalid() {
        assert_eq!(
            IoDag::new(3, vec![(2, 1)], vec![], vec![], "").unwrap_err(),
            GraphError::NotTopological { src: 2, dst: 1 }
        );
        assert_eq!(
            IoDag::new(3, vec![(1, 1)], vec![], vec![], "").unwrap_err(),
            GraphError::NotTopological { src: 1, dst: 1 }
        );
        assert_eq!(
            IoDag::new(3, vec![(0, 1), (0, 1)], vec![], vec![], "").unwrap_err(),
            GraphError::DuplicateEdge { src: 0, dst: 1 }
        );
        assert_eq!(
            IoDag::new(2, vec![(0, 3)], vec![], vec![], "").unwrap_err(),
            GraphError::NodeOutOfRange { id: 3, n: 2 }
        );
        assert_eq!(
            IoDag::new(2, vec![], vec![0, 0], vec![], "").unwrap_err(),
            GraphError::DuplicateTerminal { id: 0, list: "inputs" }
        );
    }

    #[test]
    fn delete_node_from_chain() {
        // 5-node chain, delete node 2: two components, 4 nodes, 2 edges.
        let g = chain(5);
        let (h, remap) = g.delete(&RemovalSet::nodes([2]).unwrap()).unwrap();
        assert_eq!(h.n_nodes(), 4);
        assert_eq!(h.n_edges(), 2);
        assert_eq!(remap[2], None);
        assert_eq!(remap[3], Some(2));
        assert_eq!(h.inputs(), &[0]);
        assert_eq!(h.outputs(), &[3]);
    }

    #[test]
    fn delete_empty_is_identity() {
        let g = complete_dag(4);
        let (h, remap) = g.delete(&RemovalSet::empty_nodes()).unwrap();
        assert_eq!(h, g);
        assert!(remap.iter().enumerate().all(|(i, r)| *r == Some(i)));
    }

    #[test]
    fn delete_edge_from_k4() {
        let g = complete_dag(4);
        let s = RemovalSet::edge_pairs(&g, [(1, 2)]).unwrap();
        let (h, _) = g.delete(&s).unwrap();
        assert_eq!(h.n_edges(), 5);
        assert_eq!(h.n_nodes(), 4);
        assert!(!h.has_edge(1, 2));
    }

    #[test]
    fn delete_rejects_invalid_ids() {
        let g = chain(3);
        assert!(g.delete(&RemovalSet::nodes([7]).unwrap()).is_err());
        assert!(g.delete(&RemovalSet::edges([5]).unwrap()).is_err());
    }

    #[test]
    fn depth_examples() {
        assert_eq!(chain(5).depth(), 4);
        assert_eq!(chain(1).depth(), 0);
        assert_eq!(complete_dag(4).depth(), 3);
    }

    #[test]
    fn profile_examples() {
        assert_eq!(chain(5).node_depth_profile(), vec![0, 1, 2, 3, 4]);
        assert_eq!(complete_dag(4).node_depth_profile(), vec![0, 1, 2, 3]);
        // Star: three leaves all pointing at a sink.
        let star = IoDag::new(4, vec![(0, 3), (1, 3), (2, 3)], vec![], vec![], "star").unwrap();
        assert_eq!(star.node_depth_profile(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn pairwise_longest_examples() {
        assert_eq!(chain(5).pairwise_longest(0, 4), Some(4));
        assert_eq!(complete_dag(4).pairwise_longest(0, 3), Some(3));
        let two = IoDag::new(2, vec![], vec![0], vec![1], "").unwrap();
        assert_eq!(two.pairwise_longest(0, 1), None);
        assert_eq!(two.pairwise_longest(0, 0), Some(0));
    }

    #[test]
    fn reach_matrix_examples() {
        let two = IoDag::new(2, vec![], vec![0], vec![1], "").unwrap();
        assert_eq!(two.reach_matrix(), vec![vec![false]]);
        let g = chain(3);
        assert_eq!(g.reach_matrix(), vec![vec![true]]);
        let (h, _) = g.delete(&RemovalSet::nodes([1]).unwrap()).unwrap();
        assert_eq!(h.reach_matrix(), vec![vec![false]]);
    }

    #[test]
    fn masked_views_agree_with_delete() {
        let g = complete_dag(5);
        let s = RemovalSet::nodes([1, 3]).unwrap();
        let mask = s.node_mask(&g).unwrap();
        let (h, _) = g.delete(&s).unwrap();
        assert_eq!(g.depth_masked(&mask), h.depth());
        let es = RemovalSet::edge_pairs(&g, [(0, 1), (2, 3)]).unwrap();
        let emask = match &es {
            RemovalSet::Edges(v) => Bits::from_indices(g.n_edges(), v),
            _ => unreachable!(),
        };
        let (he, _) = g.delete(&es).unwrap();
        assert_eq!(g.depth_edges_masked(&emask), he.depth());
    }

    #[test]
    fn path_validate() {
        let g = complete_dag(4);
        assert!(PathRec::new(vec![0, 1, 3]).validate(&g, None));
        assert!(!PathRec::new(vec![3, 1]).validate(&g, None));
        assert!(!PathRec::new(vec![0, 0]).validate(&g, None));
        let removed = Bits::from_indices(4, &[1]);
        assert!(!PathRec::new(vec![0, 1, 3]).validate(&g, Some(&removed)));
        assert_eq!(PathRec::new(vec![2]).len_edges(), 0);
    }
}
