//! Finite simplicial complexes over the arcs of one polygon, given by their
//! maximal faces.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc as Shared;

use serde::{Deserialize, Serialize};

use crate::arc::ArcTable;
use crate::error::{Error, Result};
use crate::face::{canonical_cmp, Face};
use crate::polygon::PolygonSpec;
use crate::triangulation::triangulation_faces;

/// A simplicial complex stored as its maximal faces, sorted canonically.
///
/// Faces index into the polygon's full [`ArcTable`], so a permitted
/// subcomplex and the unrestricted complex of the same polygon share bit
/// positions. The dimension is `-1` only for the complex whose single
/// maximal face is empty.
#[derive(Debug, Clone)]
pub struct ArcComplex {
    table: Shared<ArcTable>,
    faces: Vec<Face>,
    dim: isize,
}

impl PartialEq for ArcComplex {
    fn eq(&self, other: &Self) -> bool {
        self.table.spec() == other.table.spec()
            && self.dim == other.dim
            && self.faces == other.faces
    }
}

impl Eq for ArcComplex {}

/// The maximal faces of the (permitted) arc complex: one per triangulation.
pub fn build_complex(spec: &PolygonSpec, permitted_only: bool) -> Result<ArcComplex> {
    if permitted_only {
        spec.require_blue()?;
    }
    let table = Shared::new(ArcTable::new(spec)?);
    let faces = triangulation_faces(&table, permitted_only);
    Ok(ArcComplex::from_maximal(table, faces))
}

impl ArcComplex {
    /// Builds a complex from arbitrary faces, keeping only the maximal ones.
    pub fn from_faces(table: Shared<ArcTable>, faces: Vec<Face>) -> Self {
        let mut faces = faces;
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| canonical_cmp(a, b)));
        faces.dedup();
        let mut maximal: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !maximal.iter().any(|&g| f.is_subset(g)) {
                maximal.push(f);
            }
        }
        Self::from_maximal(table, maximal)
    }

    fn from_maximal(table: Shared<ArcTable>, mut faces: Vec<Face>) -> Self {
        faces.sort_by(canonical_cmp);
        let dim = faces.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1;
        ArcComplex { table, faces, dim }
    }

    pub fn table(&self) -> &ArcTable {
        &self.table
    }

    pub(crate) fn shared_table(&self) -> Shared<ArcTable> {
        Shared::clone(&self.table)
    }

    pub fn spec(&self) -> &PolygonSpec {
        self.table.spec()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn dimension(&self) -> isize {
        self.dim
    }

    /// Position of a maximal face in [`ArcComplex::faces`].
    pub fn face_index(&self, face: Face) -> Option<usize> {
        self.faces
            .binary_search_by(|f| canonical_cmp(f, &face))
            .ok()
    }

    /// Arcs occurring in some face.
    pub fn vertices(&self) -> Vec<crate::arc::Arc> {
        let all = self.faces.iter().fold(Face::EMPTY, |acc, &f| acc.union(f));
        self.table.arcs_of(all)
    }

    pub fn is_pure(&self) -> bool {
        let size = self.dim + 1;
        self.faces.iter().all(|f| f.len() as isize == size)
    }

    fn require_pure(&self) -> Result<()> {
        if self.is_pure() {
            Ok(())
        } else {
            Err(Error::NotPure)
        }
    }

    /// `f[k]` is the number of `k`-faces, `k = 0..=d`, counted over the
    /// downward closure.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut seen: HashSet<Face> = HashSet::new();
        for &f in &self.faces {
            for s in f.subsets() {
                if !s.is_empty() {
                    seen.insert(s);
                }
            }
        }
        let mut fv = vec![0; (self.dim + 1).max(0) as usize];
        for s in seen {
            fv[s.len() - 1] += 1;
        }
        fv
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Each `(d-1)`-face with the indices of the maximal faces containing it.
    fn facet_cofaces(&self) -> BTreeMap<Vec<usize>, (Face, Vec<usize>)> {
        let mut map: BTreeMap<Vec<usize>, (Face, Vec<usize>)> = BTreeMap::new();
        for (idx, &f) in self.faces.iter().enumerate() {
            for i in f.iter() {
                let facet = f.remove(i);
                map.entry(facet.indices())
                    .or_insert_with(|| (facet, Vec::new()))
                    .1
                    .push(idx);
            }
        }
        map
    }

    /// Vertices are maximal faces; edges join faces sharing a `(d-1)`-face.
    pub fn dual_graph(&self) -> Result<DualGraph> {
        self.require_pure()?;
        let mut edges = Vec::new();
        for (_, cofaces) in self.facet_cofaces().values() {
            for (a, &i) in cofaces.iter().enumerate() {
                for &j in &cofaces[a + 1..] {
                    edges.push((i.min(j), i.max(j)));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(DualGraph::new(self.faces.len(), edges))
    }

    pub fn strongly_connected(&self) -> Result<bool> {
        Ok(self.dual_graph()?.is_connected())
    }

    pub fn classify_codim1(&self) -> Result<Codim1Classification> {
        self.require_pure()?;
        let mut out = Codim1Classification::default();
        for (facet, cofaces) in self.facet_cofaces().into_values() {
            let n = cofaces.len();
            out.counts.push((facet, n));
            match n {
                1 => out.boundary.push(facet),
                2 => out.interior.push(facet),
                _ => out.violations.push(facet),
            }
        }
        Ok(out)
    }

    pub fn pseudomanifold_report(&self) -> PseudomanifoldReport {
        let pure = self.is_pure();
        if !pure {
            return PseudomanifoldReport {
                pure,
                strongly_connected: false,
                violation: None,
                boundary_faces: 0,
                interior_faces: 0,
            };
        }
        let classes = self.classify_codim1().expect("pure");
        PseudomanifoldReport {
            pure,
            strongly_connected: self.strongly_connected().expect("pure"),
            violation: classes.violations.first().copied(),
            boundary_faces: classes.boundary.len(),
            interior_faces: classes.interior.len(),
        }
    }

    /// Pure, strongly connected and every `(d-1)`-face in at most two
    /// maximal faces. The witness is a violating face, if any.
    pub fn is_pseudomanifold_with_boundary(&self) -> (bool, Option<Face>) {
        let r = self.pseudomanifold_report();
        (r.is_pseudomanifold(), r.violation)
    }

    /// The `(d-1)`-faces lying in exactly one maximal face.
    pub fn boundary_complex(&self) -> Result<ArcComplex> {
        let boundary = self.classify_codim1()?.boundary;
        let mut c = Self::from_maximal(self.shared_table(), boundary);
        if c.faces.is_empty() {
            c.dim = self.dim - 1;
        }
        Ok(c)
    }

    pub fn flip_graph_stats(&self) -> Result<FlipGraphStats> {
        let g = self.dual_graph()?;
        Ok(FlipGraphStats {
            vertices: g.vertex_count(),
            edges: g.edges().len(),
            diameter: g.diameter(),
        })
    }

    pub fn format_face(&self, face: Face) -> String {
        if face.is_empty() {
            "-".to_string()
        } else {
            self.table.format_face(face)
        }
    }

    pub fn parse_face(&self, line: &str) -> Result<Face> {
        parse_face_line(&self.table, line)
    }

    /// Line format: `dim=<d>`, then one maximal face per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("dim={}\n", self.dim);
        for &f in &self.faces {
            out.push_str(&self.format_face(f));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(spec: &PolygonSpec, text: &str) -> Result<ArcComplex> {
        let table = Shared::new(ArcTable::new(spec)?);
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty complex file".into()))?;
        let dim: isize = header
            .strip_prefix("dim=")
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected dim=<d>, got {header:?}")))?;
        let faces = lines
            .map(|l| parse_face_line(&table, l))
            .collect::<Result<Vec<_>>>()?;
        let mut c = ArcComplex::from_faces(table, faces);
        if c.faces.is_empty() {
            c.dim = dim;
        }
        if c.dim != dim {
            return Err(Error::Parse(format!(
                "header says dim={dim} but faces have dimension {}",
                c.dim
            )));
        }
        Ok(c)
    }

    pub fn to_document(&self) -> ComplexDocument {
        ComplexDocument {
            polygon: self.spec().to_string(),
            dim: self.dim,
            faces: self
                .faces
                .iter()
                .map(|&f| {
                    self.table
                        .arcs_of(f)
                        .iter()
                        .map(|a| a.to_string())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_document(doc: &ComplexDocument) -> Result<ArcComplex> {
        let spec: PolygonSpec = doc.polygon.parse()?;
        let mut text = format!("dim={}\n", doc.dim);
        for face in &doc.faces {
            if face.is_empty() {
                text.push('-');
            }
            text.push_str(&face.join(" "));
            text.push('\n');
        }
        Self::parse_text(&spec, &text)
    }

    /// Graphviz rendering of the dual graph, nodes labelled by their arcs.
    pub fn dual_graph_dot(&self) -> Result<String> {
        let g = self.dual_graph()?;
        let mut out = String::from("graph dual {\n");
        for (i, &f) in self.faces.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{}\"];", self.format_face(f)).unwrap();
        }
        for &(a, b) in g.edges() {
            writeln!(out, "  n{a} -- n{b};").unwrap();
        }
        out.push_str("}\n");
        Ok(out)
    }
}

pub(crate) fn parse_face_line(table: &ArcTable, line: &str) -> Result<Face> {
    if line.trim() == "-" {
        Ok(Face::EMPTY)
    } else {
        table.parse_face(line)
    }
}

/// Machine-readable mirror of the line format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub polygon: String,
    pub dim: isize,
    pub faces: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Codim1Classification {
    /// Every `(d-1)`-face with its number of maximal cofaces.
    pub counts: Vec<(Face, usize)>,
    pub interior: Vec<Face>,
    pub boundary: Vec<Face>,
    pub violations: Vec<Face>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudomanifoldReport {
    pub pure: bool,
    pub strongly_connected: bool,
    #[serde(skip)]
    pub violation: Option<Face>,
    pub boundary_faces: usize,
    pub interior_faces: usize,
}

impl PseudomanifoldReport {
    pub fn is_pseudomanifold(&self) -> bool {
        self.pure && self.strongly_connected && self.violation.is_none()
    }

    pub fn boundary_empty(&self) -> bool {
        self.boundary_faces == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipGraphStats {
    pub vertices: usize,
    pub edges: usize,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl DualGraph {
    fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        DualGraph { adjacency, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adjacency.len()];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.adjacency.is_empty() || self.distances(0).iter().all(Option::is_some)
    }

    /// Exact diameter by BFS from every vertex; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        (0..self.adjacency.len())
            .map(|s| {
                self.distances(s)
                    .into_iter()
                    .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
            })
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }
}
