//! Hypergraph isomorphism and canonical forms.
//!
//! The canonical form of a hypergraph is the lexicographically least
//! row-major bit string of its incidence matrix over all row (node) and
//! column (edge) permutations, with `0 < 1`. Two hypergraphs are isomorphic
//! iff their canonical forms are equal.
//!
//! The search builds the matrix one row at a time. Because the string is
//! row-major, the next row must be the one whose best rendering is least;
//! given the rows placed so far the columns fall into ordered cells of
//! columns that agree on every placed row, and a row's best rendering puts
//! its zeros first inside each cell. Placing a row splits every cell into
//! its zero part and its one part. The only branching is among rows that tie
//! on the rendering. Rows with identical incidence are explored once, and
//! automorphisms discovered along the way (two leaves with equal strings)
//! prune rows that lie in the same orbit as an already explored one.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, NodeId};

/// Default bound on `|V| + |E|` for canonical labelling.
pub const DEFAULT_SIZE_GUARD: usize = 40;

/// Bound on `|V| + |E|` for [`brute_force_isomorphic`].
pub const BRUTE_FORCE_LIMIT: usize = 10;

/// Isomorphism-class fingerprint, printed as `<|V|>x<|E|>:<bits>`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub nodes: usize,
    pub edges: usize,
    pub bits: Vec<bool>,
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}:", self.nodes, self.edges)?;
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for CanonicalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parameter(format!("malformed canonical form {s:?}"));
        let (shape, bits) = s.trim().split_once(':').ok_or_else(bad)?;
        let (n, m) = shape.split_once('x').ok_or_else(bad)?;
        let nodes: usize = n.parse().map_err(|_| bad())?;
        let edges: usize = m.parse().map_err(|_| bad())?;
        let bits = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.len() != nodes * edges {
            return Err(bad());
        }
        Ok(CanonicalForm { nodes, edges, bits })
    }
}

/// A canonical form together with one row and column order realising it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalLabelling {
    pub form: CanonicalForm,
    pub node_order: Vec<NodeId>,
    pub edge_order: Vec<EdgeId>,
}

/// Bijections from the nodes and edges of one hypergraph (`H'`) onto those
/// of another (`H`) that preserve incidence in both directions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IsomorphismWitness {
    pub node_map: BTreeMap<NodeId, NodeId>,
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
}

impl IsomorphismWitness {
    /// Checks that the maps are bijections `H' -> H` and that
    /// `(v', e') ∈ I'` iff `(node_map(v'), edge_map(e')) ∈ I` for every pair.
    pub fn verify(&self, h: &Hypergraph, h_prime: &Hypergraph) -> bool {
        let bijective = |domain_len: usize, keys_match: bool, mut image: Vec<&str>, target_len: usize| {
            image.sort_unstable();
            image.dedup();
            keys_match && domain_len == image.len() && image.len() == target_len
        };
        let nodes_ok = bijective(
            h_prime.node_count(),
            self.node_map.keys().eq(h_prime.nodes()) && self.node_map.values().all(|v| h.contains_node(v.as_str())),
            self.node_map.values().map(NodeId::as_str).collect(),
            h.node_count(),
        );
        let edges_ok = bijective(
            h_prime.edge_count(),
            self.edge_map.keys().eq(h_prime.edges()) && self.edge_map.values().all(|e| h.contains_edge(e.as_str())),
            self.edge_map.values().map(EdgeId::as_str).collect(),
            h.edge_count(),
        );
        if !nodes_ok || !edges_ok {
            return false;
        }
        self.node_map.iter().all(|(v2, v1)| {
            self.edge_map.iter().all(|(e2, e1)| {
                h_prime.is_incident(v2.as_str(), e2.as_str()) == h.is_incident(v1.as_str(), e1.as_str())
            })
        })
    }
}

/// Canonical labelling with a configurable size guard.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Canonizer {
    pub size_guard: usize,
}

impl Default for Canonizer {
    fn default() -> Self {
        Canonizer {
            size_guard: DEFAULT_SIZE_GUARD,
        }
    }
}

impl Canonizer {
    pub fn new(size_guard: usize) -> Self {
        Canonizer { size_guard }
    }

    fn guard(&self, h: &Hypergraph) -> Result<()> {
        if h.size() > self.size_guard {
            return Err(Error::Capacity {
                what: "hypergraph for canonical labelling",
                size: h.size(),
                limit: self.size_guard,
            });
        }
        Ok(())
    }

    pub fn form(&self, h: &Hypergraph) -> Result<CanonicalForm> {
        Ok(self.labelling(h)?.form)
    }

    pub fn labelling(&self, h: &Hypergraph) -> Result<CanonicalLabelling> {
        self.guard(h)?;
        Ok(Search::new(h).run())
    }

    /// Returns a witness mapping `h2` onto `h1` when they are isomorphic.
    pub fn isomorphism(&self, h1: &Hypergraph, h2: &Hypergraph) -> Result<Option<IsomorphismWitness>> {
        self.guard(h1)?;
        self.guard(h2)?;
        if (h1.node_count(), h1.edge_count(), h1.incidence_count())
            != (h2.node_count(), h2.edge_count(), h2.incidence_count())
            || refinement_signature(h1) != refinement_signature(h2)
        {
            return Ok(None);
        }
        let l1 = self.labelling(h1)?;
        let l2 = self.labelling(h2)?;
        if l1.form != l2.form {
            return Ok(None);
        }
        Ok(Some(IsomorphismWitness {
            node_map: l2.node_order.into_iter().zip(l1.node_order).collect(),
            edge_map: l2.edge_order.into_iter().zip(l1.edge_order).collect(),
        }))
    }
}

pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalForm> {
    Canonizer::default().form(h)
}

/// Returns a witness mapping `h2` onto `h1` when they are isomorphic.
pub fn is_isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> Result<Option<IsomorphismWitness>> {
    Canonizer::default().isomorphism(h1, h2)
}

struct Search {
    nodes: Vec<NodeId>,
    edges: Vec<EdgeId>,
    rows: Vec<Vec<bool>>,
    best: Option<(Vec<bool>, Vec<usize>, Vec<usize>)>,
    /// Row parts of automorphisms found so far.
    automorphisms: Vec<Vec<usize>>,
}

impl Search {
    fn new(h: &Hypergraph) -> Self {
        let nodes: Vec<NodeId> = h.nodes().cloned().collect();
        let edges: Vec<EdgeId> = h.edges().cloned().collect();
        let rows = h.sorted_incidence_matrix().bits;
        Search {
            nodes,
            edges,
            rows,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    fn run(mut self) -> CanonicalLabelling {
        let cells = if self.edges.is_empty() {
            Vec::new()
        } else {
            vec![(0..self.edges.len()).collect()]
        };
        let mut placed = Vec::with_capacity(self.nodes.len());
        let mut used = vec![false; self.nodes.len()];
        let mut prefix = Vec::with_capacity(self.nodes.len() * self.edges.len());
        self.descend(&mut placed, &mut used, cells, &mut prefix);
        let (bits, rows, cols) = self.best.take().expect("search always reaches a leaf");
        CanonicalLabelling {
            form: CanonicalForm {
                nodes: self.nodes.len(),
                edges: self.edges.len(),
                bits,
            },
            node_order: rows.into_iter().map(|i| self.nodes[i].clone()).collect(),
            edge_order: cols.into_iter().map(|j| self.edges[j].clone()).collect(),
        }
    }

    /// Explores every completion of `placed`. Returns `Some(depth)` when the
    /// search should unwind to `depth`: a leaf equal to the best one gives an
    /// automorphism mapping the best path onto the current one, so the
    /// subtree where the two paths first part is a copy of one already seen.
    fn descend(
        &mut self,
        placed: &mut Vec<usize>,
        used: &mut [bool],
        cells: Vec<Vec<usize>>,
        prefix: &mut Vec<bool>,
    ) -> Option<usize> {
        if placed.len() == self.nodes.len() {
            let order = match &self.best {
                None => Ordering::Less,
                Some((bits, _, _)) => prefix.as_slice().cmp(bits.as_slice()),
            };
            match order {
                Ordering::Less => {
                    self.best = Some((prefix.clone(), placed.clone(), cells.concat()));
                }
                Ordering::Equal => {
                    let (_, best_rows, _) = self.best.as_ref().expect("compared against best");
                    let parted = best_rows.iter().zip(placed.iter()).position(|(a, b)| a != b)?;
                    let mut image = vec![0; best_rows.len()];
                    for (&from, &to) in best_rows.iter().zip(placed.iter()) {
                        image[from] = to;
                    }
                    self.automorphisms.push(image);
                    return Some(parted);
                }
                Ordering::Greater => {}
            }
            return None;
        }

        // Count vectors compare like the rendered strings: fewer ones in an
        // earlier cell means more leading zeros.
        let counts =
            |row: &[bool]| -> Vec<usize> { cells.iter().map(|c| c.iter().filter(|&&j| row[j]).count()).collect() };
        let mut least: Option<Vec<usize>> = None;
        let mut candidates: Vec<usize> = Vec::new();
        for r in (0..self.nodes.len()).filter(|&r| !used[r]) {
            let c = counts(&self.rows[r]);
            match least.as_ref().map(|l| c.cmp(l)) {
                None | Some(Ordering::Less) => {
                    least = Some(c);
                    candidates.clear();
                    candidates.push(r);
                }
                Some(Ordering::Equal) => candidates.push(r),
                Some(Ordering::Greater) => {}
            }
        }
        let least = least.expect("an unplaced row exists");

        let start = prefix.len();
        for (cell, &ones) in cells.iter().zip(&least) {
            prefix.extend(std::iter::repeat_n(false, cell.len() - ones));
            prefix.extend(std::iter::repeat_n(true, ones));
        }
        if let Some((bits, _, _)) = &self.best {
            if prefix.as_slice() > &bits[..prefix.len()] {
                prefix.truncate(start);
                return None;
            }
        }

        let depth = placed.len();
        let mut explored: Vec<usize> = Vec::new();
        for r in candidates {
            // identical rows give identical subtrees
            if explored.iter().any(|&x| self.rows[x] == self.rows[r]) || self.same_orbit(placed, &explored, r) {
                continue;
            }
            let row = &self.rows[r];
            let mut next = Vec::with_capacity(cells.len() * 2);
            for cell in &cells {
                let (ones, zeros): (Vec<usize>, Vec<usize>) = cell.iter().partition(|&&j| row[j]);
                if !zeros.is_empty() {
                    next.push(zeros);
                }
                if !ones.is_empty() {
                    next.push(ones);
                }
            }
            used[r] = true;
            placed.push(r);
            let unwind = self.descend(placed, used, next, prefix);
            placed.pop();
            used[r] = false;
            explored.push(r);
            if let Some(target) = unwind {
                if target < depth {
                    prefix.truncate(start);
                    return Some(target);
                }
            }
        }
        prefix.truncate(start);
        None
    }

    /// Whether `r` shares an orbit with an explored row under the group
    /// generated by the known automorphisms that fix every placed row.
    fn same_orbit(&self, placed: &[usize], explored: &[usize], r: usize) -> bool {
        if explored.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.rows.len()).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.automorphisms {
            if placed.iter().any(|&p| g[p] != p) {
                continue;
            }
            for (from, &to) in g.iter().enumerate() {
                let (a, b) = (root(&mut parent, from), root(&mut parent, to));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let target = root(&mut parent, r);
        explored.iter().any(|&x| root(&mut parent, x) == target)
    }
}

/// Colour-refinement history of the incidence graph.
///
/// Nodes and edges start coloured by (role, degree); each round recolours
/// every object by its colour and the multiset of its neighbours' colours,
/// until the number of colours stops growing. Each round contributes the
/// sorted colour multiset, so isomorphic hypergraphs have equal histories.
pub fn refinement_signature(h: &Hypergraph) -> Vec<Vec<usize>> {
    let nodes: Vec<&NodeId> = h.nodes().collect();
    let edges: Vec<&EdgeId> = h.edges().collect();
    let node_index: HashMap<&str, usize> = nodes.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let edge_index: HashMap<&str, usize> = edges.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
    let node_adj: Vec<Vec<usize>> = nodes
        .iter()
        .map(|v| {
            h.incident_edges(v.as_str())
                .expect("own node")
                .iter()
                .map(|e| edge_index[e.as_str()])
                .collect()
        })
        .collect();
    let edge_adj: Vec<Vec<usize>> = edges
        .iter()
        .map(|e| {
            h.incident_nodes(e.as_str())
                .expect("own edge")
                .iter()
                .map(|v| node_index[v.as_str()])
                .collect()
        })
        .collect();

    // colours of nodes then edges, in one index space
    let n = nodes.len();
    let keys: Vec<(usize, usize, Vec<usize>)> = node_adj
        .iter()
        .map(|a| (0, a.len(), Vec::new()))
        .chain(edge_adj.iter().map(|a| (1, a.len(), Vec::new())))
        .collect();
    let mut colours = compress(&keys);
    let mut history = vec![sorted(&colours)];
    let mut classes = count_distinct(&colours);
    loop {
        let keys: Vec<(usize, usize, Vec<usize>)> = (0..colours.len())
            .map(|i| {
                let mut around: Vec<usize> = if i < n {
                    node_adj[i].iter().map(|&j| colours[n + j]).collect()
                } else {
                    edge_adj[i - n].iter().map(|&j| colours[j]).collect()
                };
                around.sort_unstable();
                (colours[i], 0, around)
            })
            .collect();
        let next = compress(&keys);
        let next_classes = count_distinct(&next);
        history.push(sorted(&next));
        colours = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    history
}

fn compress<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("present"))
        .collect()
}

fn sorted(colours: &[usize]) -> Vec<usize> {
    let mut s = colours.to_vec();
    s.sort_unstable();
    s
}

fn count_distinct(colours: &[usize]) -> usize {
    let mut s = sorted(colours);
    s.dedup();
    s.len()
}

/// Exhaustive isomorphism test for hypergraphs with at most
/// [`BRUTE_FORCE_LIMIT`] objects: tries every node bijection and, for each,
/// every edge bijection consistent with it.
pub fn brute_force_isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> Result<bool> {
    for h in [h1, h2] {
        if h.size() > BRUTE_FORCE_LIMIT {
            return Err(Error::Capacity {
                what: "hypergraph for brute-force isomorphism",
                size: h.size(),
                limit: BRUTE_FORCE_LIMIT,
            });
        }
    }
    if h1.node_count() != h2.node_count() || h1.edge_count() != h2.edge_count() {
        return Ok(false);
    }
    let m1 = h1.sorted_incidence_matrix();
    let m2 = h2.sorted_incidence_matrix();
    let n = m1.rows();
    let m = m1.cols();
    let mut node_perm: Vec<usize> = (0..n).collect();
    let mut found = false;
    permutations(&mut node_perm, 0, &mut |f| {
        // f maps row i of h2 to row f[i] of h1; look for g column-wise
        let mut g = vec![usize::MAX; m];
        let mut taken = vec![false; m];
        found = assign_edges(&m1.bits, &m2.bits, f, &mut g, &mut taken, 0);
        found
    });
    Ok(found)
}

/// Visits permutations of `items[k..]` until `visit` returns true.
fn permutations(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return visit(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permutations(items, k + 1, visit) {
            items.swap(k, i);
            return true;
        }
        items.swap(k, i);
    }
    false
}

fn assign_edges(
    m1: &[Vec<bool>],
    m2: &[Vec<bool>],
    f: &[usize],
    g: &mut [usize],
    taken: &mut [bool],
    col: usize,
) -> bool {
    if col == g.len() {
        return true;
    }
    for target in 0..g.len() {
        if taken[target] {
            continue;
        }
        // the biconditional on every (v', col) pair
        if (0..f.len()).all(|i| m2[i][col] == m1[f[i]][target]) {
            taken[target] = true;
            g[col] = target;
            if assign_edges(m1, m2, f, g, taken, col + 1) {
                return true;
            }
            taken[target] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rewrite::{reduce, Strategy};

    fn form(h: &Hypergraph) -> String {
        canonical_form(h).unwrap().to_string()
    }

    /// Brute-force minimum over all row and column permutations.
    fn lex_min_oracle(h: &Hypergraph) -> String {
        let m = h.sorted_incidence_matrix();
        let mut rows: Vec<usize> = (0..m.rows()).collect();
        let grid = &m.bits;
        let mut best: Option<Vec<bool>> = None;
        permutations(&mut rows, 0, &mut |r| {
            let mut cols: Vec<usize> = (0..m.cols()).collect();
            permutations(&mut cols, 0, &mut |c| {
                let bits: Vec<bool> = r.iter().flat_map(|&i| c.iter().map(move |&j| grid[i][j])).collect();
                if best.as_ref().is_none_or(|b| bits < *b) {
                    best = Some(bits);
                }
                false
            });
            false
        });
        CanonicalForm {
            nodes: m.rows(),
            edges: m.cols(),
            bits: best.unwrap_or_default(),
        }
        .to_string()
    }

    #[test]
    fn small_forms() {
        assert_eq!(form(&fixtures::twin()), "2x1:11");
        let single = Hypergraph::from_edge_lists(["v"], [("e", ["v"])]).unwrap();
        assert_eq!(form(&single), "1x1:1");
        assert_eq!(form(&Hypergraph::empty()), "0x0:");
    }

    #[test]
    fn twin_reductions_share_a_form() {
        let h = fixtures::twin();
        let a = h.remove_node("v1").unwrap();
        let b = h.remove_node("v2").unwrap();
        assert_ne!(a, b);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let w = is_isomorphic(&a, &b).unwrap().expect("isomorphic");
        assert!(w.verify(&a, &b));
        assert_eq!(w.node_map.get("v1").map(NodeId::as_str), Some("v2"));
        assert!(brute_force_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn self_isomorphism_is_identity_on_asymmetric_input() {
        let h = fixtures::diverging();
        let w = is_isomorphic(&h, &h).unwrap().unwrap();
        assert!(w.verify(&h, &h));
        assert!(w.node_map.iter().all(|(a, b)| a == b));
        assert!(w.edge_map.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn path_versus_matching() {
        let path = Hypergraph::from_edge_lists(["a", "b", "c", "d"], [("x", ["a", "b"]), ("y", ["b", "c"])]).unwrap();
        let matching =
            Hypergraph::from_edge_lists(["a", "b", "c", "d"], [("x", ["a", "b"]), ("y", ["c", "d"])]).unwrap();
        assert!(is_isomorphic(&path, &matching).unwrap().is_none());
        assert!(!brute_force_isomorphic(&path, &matching).unwrap());
    }

    #[test]
    fn shape_mismatch_is_not_isomorphic() {
        let a = fixtures::twin();
        let b = a.remove_edge("e").unwrap();
        assert!(!brute_force_isomorphic(&a, &b).unwrap());
        assert!(is_isomorphic(&a, &b).unwrap().is_none());
    }

    #[test]
    fn guards() {
        let big = fixtures::alternating_chain(21).unwrap();
        assert!(matches!(canonical_form(&big), Err(Error::Capacity { limit: 40, .. })));
        assert!(Canonizer::new(42).form(&big).is_ok());
        assert!(matches!(
            brute_force_isomorphic(&fixtures::alternating(), &fixtures::alternating()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn matches_exhaustive_lex_min() {
        let cases = [
            fixtures::twin(),
            fixtures::diverging(),
            Hypergraph::from_edge_lists(["a", "b", "c"], [("x", vec![]), ("y", vec!["a", "c"])]).unwrap(),
            Hypergraph::from_edge_lists(
                ["a", "b", "c", "d"],
                [("x", vec!["a", "b"]), ("y", vec!["b", "c"]), ("z", vec!["c", "d", "a"])],
            )
            .unwrap(),
            reduce(&fixtures::alternating(), Strategy::LexNodeFirst).0,
        ];
        for h in cases {
            assert_eq!(form(&h), lex_min_oracle(&h), "{h:?}");
        }
    }

    #[test]
    fn form_round_trips_through_text() {
        let f = canonical_form(&fixtures::diverging()).unwrap();
        assert_eq!(f.to_string().parse::<CanonicalForm>().unwrap(), f);
        assert!("2x2:101".parse::<CanonicalForm>().is_err());
        assert!("2x1".parse::<CanonicalForm>().is_err());
    }

    #[test]
    fn witness_verification_rejects_bad_maps() {
        let h = fixtures::diverging();
        let mut w = is_isomorphic(&h, &h).unwrap().unwrap();
        let v1 = NodeId::new("v1").unwrap();
        let v3 = NodeId::new("v3").unwrap();
        w.node_map.insert(v1.clone(), v3.clone());
        w.node_map.insert(v3, v1);
        assert!(!w.verify(&h, &h));
    }

    #[test]
    fn symmetric_inputs_stay_fast() {
        // 20-cycle and a complete 6x6 incidence: highly symmetric shapes
        let n = 20;
        let nodes: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, Vec<String>)> = (0..n)
            .map(|i| (format!("e{i}"), vec![format!("v{i}"), format!("v{}", (i + 1) % n)]))
            .collect();
        let cycle = Hypergraph::from_edge_lists(&nodes, edges).unwrap();
        let start = std::time::Instant::now();
        canonical_form(&cycle).unwrap();
        assert!(start.elapsed().as_secs() < 5);
        let full = Hypergraph::from_edge_lists(
            ["a", "b", "c", "d", "e", "f"],
            ["1", "2", "3", "4", "5", "6"].map(|e| (e, vec!["a", "b", "c", "d", "e", "f"])),
        )
        .unwrap();
        assert_eq!(form(&full), format!("6x6:{}", "1".repeat(36)));
    }

    #[test]
    fn disjoint_triangles_stay_fast() {
        let k = 6;
        let mut nodes = Vec::new();
        let mut edges = Vec::new();
        for t in 0..k {
            for i in 0..3 {
                nodes.push(format!("v{t}_{i}"));
                edges.push((
                    format!("e{t}_{i}"),
                    vec![format!("v{t}_{i}"), format!("v{t}_{}", (i + 1) % 3)],
                ));
            }
        }
        let h = Hypergraph::from_edge_lists(&nodes, edges).unwrap();
        let start = std::time::Instant::now();
        let f = Canonizer::new(64).form(&h).unwrap();
        assert!(start.elapsed().as_secs() < 5);
        assert_eq!((f.nodes, f.edges), (18, 18));
    }
}
