//! Oriented ordered link diagrams.
//!
//! A diagram is a list of signed crossings over arc labels. Arcs are the
//! edges of the underlying 4-valent graph: an arc ends wherever it enters
//! a crossing (as `under_in` or `over_in`) and the successor relation
//! `under_in → under_out`, `over_in → over_out` traces the components.
//! Crossing signs are explicit in the input; sign conventions for PD
//! codes vary across sources and explicitness removes a silent global
//! ambiguity. Crossingless unknot components cannot be expressed by the
//! crossing list and are declared separately.
//!
//! Component order is the input order and fixes the variable order
//! `t1, …, tμ` everywhere downstream.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};

/// One crossing. All four labels are positive integers and
/// `under_in != under_out`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub under_in: u32,
    pub over_in: u32,
    pub under_out: u32,
    pub over_out: u32,
    pub sign: i8,
}

/// An oriented ordered link diagram with `num_components` components
/// (0-based indices internally; 1-based in files and printed output).
#[derive(Clone, Debug)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    num_components: usize,
    arc_component: BTreeMap<u32, usize>,
    free_components: Vec<usize>,
}

/// Symmetric linking matrix with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    entries: Vec<Vec<i64>>,
}

/// A finite group presentation with one distinguished link component per
/// generator. Relator letters are signed 1-based generator indices.
#[derive(Clone, Debug)]
pub struct GroupPresentation {
    pub num_generators: usize,
    pub relators: Vec<Vec<i32>>,
    pub generator_component: Vec<usize>,
}

// -------------------------------------------------------------------
// Input documents
// -------------------------------------------------------------------

#[derive(Deserialize)]
struct PdFile {
    components: usize,
    #[serde(default)]
    crossings: Vec<PdCrossing>,
    #[serde(default)]
    free_components: Vec<usize>,
    #[serde(default)]
    component_of_arc: Option<BTreeMap<String, usize>>,
}

#[derive(Deserialize)]
struct PdCrossing {
    under_in: u32,
    over_in: u32,
    under_out: u32,
    over_out: u32,
    sign: i32,
}

#[derive(Deserialize)]
struct BraidFile {
    strands: usize,
    word: Vec<i64>,
}

/// Parses the PD JSON document format.
pub fn parse_pd(document: &str) -> Result<LinkDiagram> {
    let file: PdFile =
        serde_json::from_str(document).map_err(|e| Error::Parse(format!("pd document: {e}")))?;
    let mut crossings = Vec::with_capacity(file.crossings.len());
    for (i, c) in file.crossings.iter().enumerate() {
        if c.sign != 1 && c.sign != -1 {
            return Err(Error::InvalidDiagram(format!(
                "crossing {}: sign must be +1 or -1, got {}",
                i + 1,
                c.sign
            )));
        }
        crossings.push(Crossing {
            under_in: c.under_in,
            over_in: c.over_in,
            under_out: c.under_out,
            over_out: c.over_out,
            sign: c.sign as i8,
        });
    }
    let explicit = match &file.component_of_arc {
        None => None,
        Some(map) => {
            let mut parsed = BTreeMap::new();
            for (k, &v) in map {
                let arc: u32 = k.parse().map_err(|_| {
                    Error::Parse(format!("component_of_arc key '{k}' is not an arc label"))
                })?;
                if v == 0 || v > file.components {
                    return Err(Error::InvalidDiagram(format!(
                        "component_of_arc maps arc {arc} to component {v}, out of range 1..={}",
                        file.components
                    )));
                }
                parsed.insert(arc, v - 1);
            }
            Some(parsed)
        }
    };
    let free: Vec<usize> = file
        .free_components
        .iter()
        .map(|&i| {
            if i == 0 || i > file.components {
                Err(Error::InvalidDiagram(format!(
                    "free component index {i} out of range 1..={}",
                    file.components
                )))
            } else {
                Ok(i - 1)
            }
        })
        .collect::<Result<_>>()?;
    LinkDiagram::assemble(crossings, file.components, free, explicit)
}

/// Parses the braid JSON document format and closes the braid.
pub fn parse_braid(document: &str) -> Result<LinkDiagram> {
    let file: BraidFile =
        serde_json::from_str(document).map_err(|e| Error::Parse(format!("braid document: {e}")))?;
    braid_closure(&file.word, file.strands)
}

// -------------------------------------------------------------------
// Construction and validation
// -------------------------------------------------------------------

impl LinkDiagram {
    /// Direct constructor used by parsing, braid closure and component
    /// deletion. `free_from_input` lists 0-based indices of declared
    /// crossingless components; `explicit` optionally pins arcs to
    /// 0-based component indices.
    fn assemble(
        crossings: Vec<Crossing>,
        num_components: usize,
        free_from_input: Vec<usize>,
        explicit: Option<BTreeMap<u32, usize>>,
    ) -> Result<LinkDiagram> {
        for (i, c) in crossings.iter().enumerate() {
            for label in [c.under_in, c.over_in, c.under_out, c.over_out] {
                if label == 0 {
                    return Err(Error::InvalidDiagram(format!(
                        "crossing {}: arc labels must be positive",
                        i + 1
                    )));
                }
            }
            if c.under_in == c.under_out {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {}: under_in equals under_out (arc {})",
                    i + 1,
                    c.under_in
                )));
            }
        }

        // Every arc must appear exactly once as an input and once as an
        // output; the successor relation is then a permutation of arcs.
        let mut in_count: BTreeMap<u32, usize> = BTreeMap::new();
        let mut out_count: BTreeMap<u32, usize> = BTreeMap::new();
        let mut successor: BTreeMap<u32, u32> = BTreeMap::new();
        for c in &crossings {
            *in_count.entry(c.under_in).or_insert(0) += 1;
            *in_count.entry(c.over_in).or_insert(0) += 1;
            *out_count.entry(c.under_out).or_insert(0) += 1;
            *out_count.entry(c.over_out).or_insert(0) += 1;
            successor.insert(c.under_in, c.under_out);
            successor.insert(c.over_in, c.over_out);
        }
        let mut arcs: Vec<u32> = in_count.keys().copied().collect();
        for a in out_count.keys() {
            if !in_count.contains_key(a) {
                arcs.push(*a);
            }
        }
        arcs.sort_unstable();
        for &a in &arcs {
            let i = in_count.get(&a).copied().unwrap_or(0);
            let o = out_count.get(&a).copied().unwrap_or(0);
            if i != 1 || o != 1 {
                return Err(Error::InvalidDiagram(format!(
                    "arc {a} appears {i} time(s) as an input and {o} as an output; expected 1 and 1"
                )));
            }
        }

        // Trace closed cycles.
        let mut cycle_of: BTreeMap<u32, usize> = BTreeMap::new();
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        for &start in &arcs {
            if cycle_of.contains_key(&start) {
                continue;
            }
            let mut cycle = vec![start];
            cycle_of.insert(start, cycles.len());
            let mut cur = successor[&start];
            while cur != start {
                if cycle_of.contains_key(&cur) {
                    return Err(Error::InvalidDiagram(format!(
                        "arc {cur} is reached from two different cycles"
                    )));
                }
                cycle_of.insert(cur, cycles.len());
                cycle.push(cur);
                cur = successor[&cur];
            }
            cycles.push(cycle);
        }

        let total = cycles.len() + free_from_input.len();
        if total != num_components {
            return Err(Error::InvalidDiagram(format!(
                "declared {num_components} component(s) but found {} traced cycle(s) and {} free component(s)",
                cycles.len(),
                free_from_input.len()
            )));
        }
        let mut free_sorted = free_from_input.clone();
        free_sorted.sort_unstable();
        free_sorted.dedup();
        if free_sorted.len() != free_from_input.len() {
            return Err(Error::InvalidDiagram(
                "duplicate free component index".into(),
            ));
        }

        // Assign component indices: declared free components keep their
        // indices, traced cycles take the remaining indices in order of
        // their minimal arc label, unless an explicit map pins them.
        let mut arc_component: BTreeMap<u32, usize> = BTreeMap::new();
        match explicit {
            Some(map) => {
                for &a in &arcs {
                    let comp = *map.get(&a).ok_or_else(|| {
                        Error::InvalidDiagram(format!("component_of_arc is missing arc {a}"))
                    })?;
                    arc_component.insert(a, comp);
                }
                for cycle in &cycles {
                    let c0 = arc_component[&cycle[0]];
                    for a in cycle {
                        if arc_component[a] != c0 {
                            return Err(Error::InvalidDiagram(format!(
                                "component_of_arc is not constant along the cycle through arc {}",
                                cycle[0]
                            )));
                        }
                    }
                    if free_sorted.binary_search(&c0).is_ok() {
                        return Err(Error::InvalidDiagram(format!(
                            "component {} is declared free but has arcs",
                            c0 + 1
                        )));
                    }
                }
                let mut seen: Vec<usize> = cycles.iter().map(|cy| arc_component[&cy[0]]).collect();
                seen.sort_unstable();
                seen.dedup();
                if seen.len() != cycles.len() {
                    return Err(Error::InvalidDiagram(
                        "component_of_arc assigns two cycles to one component".into(),
                    ));
                }
            }
            None => {
                let mut remaining: Vec<usize> = (0..num_components)
                    .filter(|i| free_sorted.binary_search(i).is_err())
                    .collect();
                remaining.truncate(cycles.len());
                // cycles are already ordered by minimal arc label because
                // tracing starts from sorted arcs
                for (cycle, comp) in cycles.iter().zip(remaining) {
                    for &a in cycle {
                        arc_component.insert(a, comp);
                    }
                }
            }
        }

        Ok(LinkDiagram {
            crossings,
            num_components,
            arc_component,
            free_components: free_sorted,
        })
    }

    pub fn num_components(&self) -> usize {
        self.num_components
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn num_arcs(&self) -> usize {
        self.arc_component.len()
    }

    pub fn arc_component(&self, arc: u32) -> usize {
        self.arc_component[&arc]
    }

    pub fn free_components(&self) -> &[usize] {
        &self.free_components
    }

    /// The diagram obtained by removing one component: its crossings
    /// disappear and the strands that crossed it are re-spliced. The
    /// remaining components keep their relative order.
    pub fn delete_component(&self, comp: usize) -> Result<LinkDiagram> {
        assert!(comp < self.num_components, "component index out of range");
        assert!(self.num_components >= 2, "cannot delete the only component");

        if self.free_components.contains(&comp) {
            let crossings = self.crossings.clone();
            let free: Vec<usize> = self
                .free_components
                .iter()
                .filter(|&&f| f != comp)
                .map(|&f| if f > comp { f - 1 } else { f })
                .collect();
            let explicit: BTreeMap<u32, usize> = self
                .arc_component
                .iter()
                .map(|(&a, &c)| (a, if c > comp { c - 1 } else { c }))
                .collect();
            return LinkDiagram::assemble(crossings, self.num_components - 1, free, Some(explicit));
        }

        let mut uf = ArcUnion::new();
        let mut kept: Vec<Crossing> = Vec::new();
        for c in &self.crossings {
            let under_comp = self.arc_component[&c.under_in];
            let over_comp = self.arc_component[&c.over_in];
            if under_comp == comp && over_comp == comp {
                continue;
            }
            if under_comp == comp {
                uf.union(c.over_in, c.over_out);
                continue;
            }
            if over_comp == comp {
                uf.union(c.under_in, c.under_out);
                continue;
            }
            kept.push(c.clone());
        }
        let relabeled: Vec<Crossing> = kept
            .iter()
            .map(|c| Crossing {
                under_in: uf.find(c.under_in),
                over_in: uf.find(c.over_in),
                under_out: uf.find(c.under_out),
                over_out: uf.find(c.over_out),
                sign: c.sign,
            })
            .collect();

        let remap = |old: usize| if old > comp { old - 1 } else { old };
        let mut explicit: BTreeMap<u32, usize> = BTreeMap::new();
        let mut seen_comps: Vec<usize> = Vec::new();
        for c in &relabeled {
            for arc in [c.under_in, c.over_in, c.under_out, c.over_out] {
                let old = self.arc_component[&uf.member(arc)];
                explicit.insert(arc, remap(old));
                seen_comps.push(remap(old));
            }
        }
        seen_comps.sort_unstable();
        seen_comps.dedup();

        // Surviving components that lost all their crossings become free.
        let mut free: Vec<usize> = self.free_components.iter().map(|&f| remap(f)).collect();
        for old in 0..self.num_components {
            if old == comp || self.free_components.contains(&old) {
                continue;
            }
            if !seen_comps.contains(&remap(old)) {
                free.push(remap(old));
            }
        }
        free.sort_unstable();

        LinkDiagram::assemble(relabeled, self.num_components - 1, free, Some(explicit))
    }
}

/// Closure of a braid word on `strands` strands. Letter `k > 0` is the
/// generator crossing the strand at position `k` over position `k+1`
/// with a positive crossing; negative letters are the inverses.
pub fn braid_closure(word: &[i64], strands: usize) -> Result<LinkDiagram> {
    if strands == 0 {
        return Err(Error::InvalidInput(
            "braid needs at least one strand".into(),
        ));
    }
    for &letter in word {
        let k = letter.unsigned_abs() as usize;
        if letter == 0 || k > strands - 1 {
            return Err(Error::InvalidInput(format!(
                "braid letter {letter} out of range for {strands} strand(s)"
            )));
        }
    }

    let mut active: Vec<u32> = (1..=strands as u32).collect();
    let mut next_label = strands as u32 + 1;
    let mut crossings: Vec<Crossing> = Vec::with_capacity(word.len());
    for &letter in word {
        let k = letter.unsigned_abs() as usize - 1;
        let left = active[k];
        let right = active[k + 1];
        let out_a = next_label;
        let out_b = next_label + 1;
        next_label += 2;
        if letter > 0 {
            // left strand passes over
            crossings.push(Crossing {
                under_in: right,
                over_in: left,
                under_out: out_a,
                over_out: out_b,
                sign: 1,
            });
            active[k] = out_a;
            active[k + 1] = out_b;
        } else {
            crossings.push(Crossing {
                under_in: left,
                over_in: right,
                under_out: out_a,
                over_out: out_b,
                sign: -1,
            });
            active[k] = out_b;
            active[k + 1] = out_a;
        }
    }

    // Close up: the bottom of each strand position joins its top.
    let mut uf = ArcUnion::new();
    for (pos, &bottom) in active.iter().enumerate() {
        uf.union(bottom, pos as u32 + 1);
    }
    let relabeled: Vec<Crossing> = crossings
        .iter()
        .map(|c| Crossing {
            under_in: uf.find(c.under_in),
            over_in: uf.find(c.over_in),
            under_out: uf.find(c.under_out),
            over_out: uf.find(c.over_out),
            sign: c.sign,
        })
        .collect();

    // Strand positions untouched by any crossing close into crossingless
    // unknots. Their would-be labels are the initial 1..=strands, so
    // ordering components by minimal label keeps them in position order.
    let mut used: Vec<u32> = Vec::new();
    for c in &relabeled {
        used.extend([c.under_in, c.over_in, c.under_out, c.over_out]);
    }
    used.sort_unstable();
    used.dedup();
    let free_labels: Vec<u32> = (1..=strands as u32)
        .map(|p| uf.find(p))
        .filter(|l| !used.contains(l))
        .collect();
    let mut free_labels = free_labels;
    free_labels.sort_unstable();
    free_labels.dedup();

    // Component indices: trace cycles among used arcs, then interleave
    // free components by minimal label.
    let provisional = LinkDiagram::assemble(
        relabeled.clone(),
        count_cycles(&relabeled),
        Vec::new(),
        None,
    )?;
    let mut min_label_per_comp: Vec<(u32, Option<usize>)> = Vec::new();
    let mut traced_min: BTreeMap<usize, u32> = BTreeMap::new();
    for (&arc, &compid) in &provisional.arc_component {
        let e = traced_min.entry(compid).or_insert(arc);
        if arc < *e {
            *e = arc;
        }
    }
    for (&compid, &min) in &traced_min {
        min_label_per_comp.push((min, Some(compid)));
    }
    for &l in &free_labels {
        min_label_per_comp.push((l, None));
    }
    min_label_per_comp.sort_unstable();

    let num_components = min_label_per_comp.len();
    let mut explicit: BTreeMap<u32, usize> = BTreeMap::new();
    let mut free: Vec<usize> = Vec::new();
    for (newid, (_, traced)) in min_label_per_comp.iter().enumerate() {
        match traced {
            Some(old) => {
                for (&arc, &compid) in &provisional.arc_component {
                    if compid == *old {
                        explicit.insert(arc, newid);
                    }
                }
            }
            None => free.push(newid),
        }
    }
    LinkDiagram::assemble(relabeled, num_components, free, Some(explicit))
}

fn count_cycles(crossings: &[Crossing]) -> usize {
    let mut successor: BTreeMap<u32, u32> = BTreeMap::new();
    for c in crossings {
        successor.insert(c.under_in, c.under_out);
        successor.insert(c.over_in, c.over_out);
    }
    let mut seen: BTreeMap<u32, bool> = BTreeMap::new();
    let mut cycles = 0;
    let starts: Vec<u32> = successor.keys().copied().collect();
    for start in starts {
        if seen.get(&start).copied().unwrap_or(false) {
            continue;
        }
        cycles += 1;
        let mut cur = start;
        loop {
            seen.insert(cur, true);
            cur = match successor.get(&cur) {
                Some(&n) => n,
                None => break,
            };
            if cur == start {
                break;
            }
        }
    }
    cycles
}

// -------------------------------------------------------------------
// Derived data
// -------------------------------------------------------------------

/// Linking numbers from the diagram: `l_ij` is half the signed count of
/// crossings whose two strands lie on components `i != j`.
pub fn linking_matrix(d: &LinkDiagram) -> Result<LinkingMatrix> {
    let mu = d.num_components();
    let mut sums = vec![vec![0i64; mu]; mu];
    for c in d.crossings() {
        let a = d.arc_component(c.under_in);
        let b = d.arc_component(c.over_in);
        if a != b {
            sums[a][b] += c.sign as i64;
            sums[b][a] += c.sign as i64;
        }
    }
    let mut entries = vec![vec![0i64; mu]; mu];
    for i in 0..mu {
        for j in 0..mu {
            if sums[i][j] % 2 != 0 {
                return Err(Error::InvalidDiagram(format!(
                    "crossing signs between components {} and {} sum to the odd value {}",
                    i + 1,
                    j + 1,
                    sums[i][j]
                )));
            }
            entries[i][j] = sums[i][j] / 2;
        }
    }
    Ok(LinkingMatrix { entries })
}

/// Wirtinger presentation of the link group. Arcs that continue through
/// an overcrossing merge into a single meridian generator; each crossing
/// with over-arc `o`, incoming under-arc `u`, outgoing under-arc `v` and
/// sign `e` contributes the relator `v o^e u^-1 o^-e`.
pub fn wirtinger(d: &LinkDiagram) -> GroupPresentation {
    let mut uf = ArcUnion::new();
    for &arc in d.arc_component.keys() {
        uf.find(arc);
    }
    for c in d.crossings() {
        uf.union(c.over_in, c.over_out);
    }
    let mut roots: Vec<u32> = d.arc_component.keys().map(|&a| uf.find(a)).collect();
    roots.sort_unstable();
    roots.dedup();
    let index_of = |root: u32, roots: &[u32]| roots.binary_search(&root).unwrap();

    let mut generator_component: Vec<usize> = roots
        .iter()
        .map(|&r| d.arc_component[&uf.member(r)])
        .collect();
    let mut relators: Vec<Vec<i32>> = Vec::with_capacity(d.crossings().len());
    for c in d.crossings() {
        let o = index_of(uf.find(c.over_in), &roots) as i32 + 1;
        let u = index_of(uf.find(c.under_in), &roots) as i32 + 1;
        let v = index_of(uf.find(c.under_out), &roots) as i32 + 1;
        let e = c.sign as i32;
        relators.push(vec![v, e * o, -u, -e * o]);
    }
    // one free generator per crossingless component
    for &f in d.free_components() {
        generator_component.push(f);
    }
    GroupPresentation {
        num_generators: generator_component.len(),
        relators,
        generator_component,
    }
}

impl LinkingMatrix {
    pub fn zero(mu: usize) -> Self {
        LinkingMatrix {
            entries: vec![vec![0; mu]; mu],
        }
    }

    /// Builds from rows, validating symmetry and the zero diagonal.
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Result<Self> {
        let mu = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != mu {
                return Err(Error::InvalidInput("linking matrix is not square".into()));
            }
            if row[i] != 0 {
                return Err(Error::InvalidInput(
                    "linking matrix diagonal must be zero".into(),
                ));
            }
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != entries[j][i] {
                    return Err(Error::InvalidInput(
                        "linking matrix is not symmetric".into(),
                    ));
                }
            }
        }
        Ok(LinkingMatrix { entries })
    }

    pub fn mu(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Deletes row and column `i`, preserving the order of the rest.
    pub fn deleted(&self, comp: usize) -> LinkingMatrix {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != comp)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != comp)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        LinkingMatrix { entries }
    }

    /// Conjugates by a permutation: entry `(i, j)` of the result is the
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> LinkingMatrix {
        assert_eq!(perm.len(), self.mu());
        let entries = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| self.entries[i][j]).collect())
            .collect();
        LinkingMatrix { entries }
    }
}

// -------------------------------------------------------------------

struct ArcUnion {
    parent: BTreeMap<u32, u32>,
}

impl ArcUnion {
    fn new() -> Self {
        ArcUnion {
            parent: BTreeMap::new(),
        }
    }

    fn find(&mut self, x: u32) -> u32 {
        let p = *self.parent.get(&x).unwrap_or(&x);
        if p == x {
            return x;
        }
        let root = self.find(p);
        self.parent.insert(x, root);
        root
    }

    /// Unites keeping the smaller label as the class representative.
    fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent.insert(hi, lo);
    }

    /// Any member of the class of `x`; the representative is a member.
    fn member(&mut self, x: u32) -> u32 {
        self.find(x)
    }
}
