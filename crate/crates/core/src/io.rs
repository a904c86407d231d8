//! Text formats for instances and certificates.
//!
//! Both are TOML documents. The writer emits a canonical layout (fixed key
//! order, vertices in index order, map entries sorted by name, zero entries
//! omitted), so writing a parsed file reproduces it byte for byte. Parse
//! errors name the offending line.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Deserialize;
use toml::Spanned;

use crate::config::{Configuration, Demand, MoveList};
use crate::error::{PebbleError, Result};
use crate::graph::Graph;
use crate::reductions::{Goal, ReducedInstance, Role};

/// What an instance asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DemandSpec {
    Unit,
    Reach(usize),
    Explicit(Demand),
}

impl DemandSpec {
    pub fn to_demand(&self, n: usize) -> Demand {
        match self {
            DemandSpec::Unit => Demand::unit(n),
            DemandSpec::Reach(v) => Demand::reach(n, *v),
            DemandSpec::Explicit(d) => d.clone(),
        }
    }

    /// Parses `unit` or `reach:NAME` against the vertex names of `g`.
    pub fn parse_kind(kind: &str, g: &Graph) -> Result<Self> {
        if kind == "unit" {
            return Ok(DemandSpec::Unit);
        }
        if let Some(name) = kind.strip_prefix("reach:") {
            return g
                .index_of(name)
                .map(DemandSpec::Reach)
                .ok_or_else(|| invalid(format!("demand_kind names unknown vertex \"{name}\"")));
        }
        Err(invalid(format!("demand_kind must be \"unit\" or \"reach:NAME\", got \"{kind}\"")))
    }
}

/// A parsed instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub config: Configuration,
    pub demand: Option<DemandSpec>,
    pub threshold: Option<u64>,
    /// Empty unless the file lists roles.
    pub roles: Vec<Role>,
    pub trivial: bool,
}

impl Instance {
    pub fn new(graph: Graph, config: Configuration, demand: Option<DemandSpec>) -> Self {
        Self { graph, config, demand, threshold: None, roles: Vec::new(), trivial: false }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawInstance = toml::from_str(text).map_err(|e| invalid(flatten(&e.to_string())))?;
        raw.resolve(text)
    }

    pub fn demand(&self) -> Option<Demand> {
        self.demand.as_ref().map(|d| d.to_demand(self.graph.vertex_count()))
    }

    pub fn from_reduced(r: &ReducedInstance) -> Self {
        let demand = match &r.goal {
            Goal::Target(v) => DemandSpec::Reach(*v),
            Goal::Demand(d) if *d == Demand::unit(r.graph.vertex_count()) => DemandSpec::Unit,
            Goal::Demand(d) => DemandSpec::Explicit(d.clone()),
        };
        Self {
            graph: r.graph.clone(),
            config: r.config.clone(),
            demand: Some(demand),
            threshold: r.threshold,
            roles: r.roles.clone(),
            trivial: r.trivial,
        }
    }

    /// Inverse of [`Instance::from_reduced`].
    pub fn to_reduced(&self) -> Result<ReducedInstance> {
        let n = self.graph.vertex_count();
        let goal = match &self.demand {
            Some(DemandSpec::Reach(v)) => Goal::Target(*v),
            Some(DemandSpec::Unit) => Goal::Demand(Demand::unit(n)),
            Some(DemandSpec::Explicit(d)) => Goal::Demand(d.clone()),
            None => return Err(invalid("instance has no demand".into())),
        };
        if self.roles.len() != n {
            return Err(invalid(format!("expected {n} roles, found {}", self.roles.len())));
        }
        Ok(ReducedInstance {
            graph: self.graph.clone(),
            config: self.config.clone(),
            goal,
            threshold: self.threshold,
            roles: self.roles.clone(),
            trivial: self.trivial,
        })
    }

    /// Canonical text form.
    pub fn to_toml(&self) -> String {
        let g = &self.graph;
        let mut out = String::new();
        let names: Vec<String> = g.names().iter().map(|s| quote(s)).collect();
        let _ = writeln!(out, "vertices = [{}]", names.join(", "));
        if g.edges().is_empty() {
            out.push_str("edges = []\n");
        } else {
            out.push_str("edges = [\n");
            for &(a, b) in g.edges() {
                let _ = writeln!(out, "  [{}, {}],", names[a], names[b]);
            }
            out.push_str("]\n");
        }
        match &self.demand {
            Some(DemandSpec::Unit) => out.push_str("demand_kind = \"unit\"\n"),
            Some(DemandSpec::Reach(v)) => {
                let _ = writeln!(out, "demand_kind = {}", quote(&format!("reach:{}", g.name(*v))));
            }
            _ => {}
        }
        if let Some(t) = self.threshold {
            let _ = writeln!(out, "threshold = {t}");
        }
        if self.trivial {
            out.push_str("trivial = true\n");
        }
        if !self.roles.is_empty() {
            let codes: Vec<String> = self.roles.iter().map(|r| quote(&role_code(r))).collect();
            let _ = writeln!(out, "roles = [{}]", codes.join(", "));
        }
        write_table(&mut out, "config", g, self.config.counts());
        if let Some(DemandSpec::Explicit(d)) = &self.demand {
            write_table(&mut out, "demand", g, d.counts());
        }
        out
    }
}

fn write_table(out: &mut String, title: &str, g: &Graph, counts: &[i64]) {
    let _ = write!(out, "\n[{title}]\n");
    let sorted: BTreeMap<&str, i64> =
        counts.iter().enumerate().filter(|(_, &c)| c != 0).map(|(v, &c)| (g.name(v), c)).collect();
    for (name, count) in sorted {
        let _ = writeln!(out, "{} = {count}", key(name));
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    vertices: Vec<Spanned<String>>,
    #[serde(default)]
    edges: Vec<Spanned<(String, String)>>,
    #[serde(default)]
    config: BTreeMap<String, Spanned<i64>>,
    demand: Option<BTreeMap<String, Spanned<i64>>>,
    demand_kind: Option<Spanned<String>>,
    threshold: Option<u64>,
    roles: Option<Spanned<Vec<Spanned<String>>>>,
    #[serde(default)]
    trivial: bool,
}

impl RawInstance {
    fn resolve(self, text: &str) -> Result<Instance> {
        let at = |span: std::ops::Range<usize>, msg: String| invalid(format!("line {}: {msg}", line_of(text, span.start)));
        let mut index = BTreeMap::new();
        for (i, name) in self.vertices.iter().enumerate() {
            if index.insert(name.get_ref().as_str(), i).is_some() {
                return Err(at(name.span(), format!("vertex \"{}\" declared twice", name.get_ref())));
            }
        }
        let lookup = |name: &str, span: std::ops::Range<usize>| {
            index.get(name).copied().ok_or_else(|| at(span, format!("\"{name}\" is not a declared vertex")))
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let (a, b) = e.get_ref();
            edges.push((lookup(a, e.span())?, lookup(b, e.span())?));
        }
        let names: Vec<String> = self.vertices.iter().map(|s| s.get_ref().clone()).collect();
        let n = names.len();
        let graph = Graph::with_names(names, &edges).map_err(|err| {
            let culprit = match err {
                PebbleError::SelfLoop(v) => edges.iter().position(|&e| e == (v, v)),
                PebbleError::ParallelEdge(a, b) => {
                    edges.iter().enumerate().filter(|(_, &(x, y))| (x.min(y), x.max(y)) == (a, b)).nth(1).map(|(i, _)| i)
                }
                _ => None,
            };
            match culprit {
                Some(i) => at(self.edges[i].span(), err.to_string()),
                None => invalid(err.to_string()),
            }
        })?;

        let mut counts = vec![0i64; n];
        for (name, value) in &self.config {
            counts[lookup(name, value.span())?] = *value.get_ref();
        }
        let config = if counts.iter().any(|&c| c < 0) {
            Configuration::extended(counts)
        } else {
            Configuration::new(counts)?
        };

        let demand = match (self.demand, self.demand_kind) {
            (Some(_), Some(kind)) => {
                return Err(at(kind.span(), "give either a demand table or demand_kind, not both".into()));
            }
            (Some(table), None) => {
                let mut counts = vec![0i64; n];
                for (name, value) in &table {
                    if *value.get_ref() < 0 {
                        return Err(at(value.span(), format!("negative demand at \"{name}\"")));
                    }
                    counts[lookup(name, value.span())?] = *value.get_ref();
                }
                Some(DemandSpec::Explicit(Demand::new(counts)?))
            }
            (None, Some(kind)) => {
                Some(DemandSpec::parse_kind(kind.get_ref(), &graph).map_err(|e| at(kind.span(), e.to_string()))?)
            }
            (None, None) => None,
        };

        let roles = match self.roles {
            None => Vec::new(),
            Some(list) => {
                if list.get_ref().len() != n {
                    return Err(at(list.span(), format!("expected {n} roles, found {}", list.get_ref().len())));
                }
                list.get_ref()
                    .iter()
                    .map(|r| parse_role(r.get_ref()).ok_or_else(|| at(r.span(), format!("unknown role \"{}\"", r.get_ref()))))
                    .collect::<Result<_>>()?
            }
        };
        Ok(Instance { graph, config, demand, threshold: self.threshold, roles, trivial: self.trivial })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCertificate {
    #[serde(default)]
    moves: Vec<Spanned<RawMove>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMove {
    from: String,
    to: String,
    count: i64,
}

/// Parses a certificate against the vertex names and edges of `g`.
pub fn parse_certificate(text: &str, g: &Graph) -> Result<MoveList> {
    let raw: RawCertificate = toml::from_str(text).map_err(|e| invalid(flatten(&e.to_string())))?;
    let mut seen = BTreeSet::new();
    let mut ml = MoveList::new();
    for m in &raw.moves {
        let at = |msg: String| invalid(format!("line {}: {msg}", line_of(text, m.span().start)));
        let mv = m.get_ref();
        let from = g.index_of(&mv.from).ok_or_else(|| at(format!("\"{}\" is not a vertex", mv.from)))?;
        let to = g.index_of(&mv.to).ok_or_else(|| at(format!("\"{}\" is not a vertex", mv.to)))?;
        if mv.count < 1 {
            return Err(at(format!("move count must be at least 1, got {}", mv.count)));
        }
        if !g.has_edge(from, to) {
            return Err(at(format!("\"{}\" and \"{}\" are not adjacent", mv.from, mv.to)));
        }
        if !seen.insert((from, to)) {
            return Err(at(format!("move {} -> {} listed twice", mv.from, mv.to)));
        }
        ml.set(from, to, mv.count as u64);
    }
    Ok(ml)
}

/// Canonical text form of a certificate, moves in index order.
pub fn write_certificate(g: &Graph, ml: &MoveList) -> String {
    if ml.is_empty() {
        return "moves = []\n".into();
    }
    let mut out = String::new();
    for ((from, to), count) in ml.iter() {
        if !out.is_empty() {
            out.push('\n');
        }
        let _ = writeln!(out, "[[moves]]\nfrom = {}\nto = {}\ncount = {count}", quote(g.name(from)), quote(g.name(to)));
    }
    out
}

/// Stable text code for a role, e.g. `B'':2` or `u:0:3` (0-based indices).
pub fn role_code(role: &Role) -> String {
    match *role {
        Role::Element(i) | Role::Set(i) | Role::SetPrime(i) | Role::SetDoublePrime(i) | Role::SetTriplePrime(i)
        | Role::Path(i) | Role::Copy(i) | Role::Tail(i) => format!("{}:{i}", role.tag()),
        Role::Grid(i, j) => format!("{}:{i}:{j}", role.tag()),
        Role::Hub | Role::Sink => role.tag().to_string(),
    }
}

pub fn parse_role(code: &str) -> Option<Role> {
    let mut parts = code.split(':');
    let tag = parts.next()?;
    let nums: Vec<usize> = parts.map(str::parse).collect::<std::result::Result<_, _>>().ok()?;
    let role = match (tag, nums.as_slice()) {
        ("T", &[i]) => Role::Element(i),
        ("B", &[i]) => Role::Set(i),
        ("B'", &[i]) => Role::SetPrime(i),
        ("B''", &[i]) => Role::SetDoublePrime(i),
        ("B'''", &[i]) => Role::SetTriplePrime(i),
        ("path", &[i]) => Role::Path(i),
        ("H", &[i]) => Role::Copy(i),
        ("w_i", &[i]) => Role::Tail(i),
        ("u", &[i, j]) => Role::Grid(i, j),
        ("v", &[]) => Role::Hub,
        ("w", &[]) => Role::Sink,
        _ => return None,
    };
    Some(role)
}

fn invalid(msg: String) -> PebbleError {
    PebbleError::InvalidInput(msg)
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// The TOML error report spans several lines; keep it on one.
fn flatten(report: &str) -> String {
    report.lines().map(str::trim).filter(|l| !l.is_empty()).collect::<Vec<_>>().join(" ")
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if c.is_control() => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn key(s: &str) -> String {
    let bare = !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
    if bare {
        s.to_string()
    } else {
        quote(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{reduce_cover_to_canonical, reduce_to_cover_solvability, reduce_to_number_threshold, X4CInstance};

    const P3: &str = "vertices = [\"v1\", \"v2\", \"v3\"]\nedges = [\n  [\"v1\", \"v2\"],\n  [\"v2\", \"v3\"],\n]\ndemand_kind = \"unit\"\n\n[config]\nv1 = 7\n";

    #[test]
    fn parse_and_write_are_inverse() {
        let inst = Instance::parse(P3).unwrap();
        assert_eq!(inst.graph, Graph::path(3).unwrap());
        assert_eq!(inst.config.counts(), &[7, 0, 0]);
        assert_eq!(inst.demand(), Some(Demand::unit(3)));
        assert_eq!(inst.to_toml(), P3);
    }

    #[test]
    fn explicit_demand_and_signed_config() {
        let text = "vertices = [\"a\", \"b c\"]\nedges = [[\"a\", \"b c\"]]\n[config]\n\"b c\" = -2\na = 9\n[demand]\na = 1\n";
        let inst = Instance::parse(text).unwrap();
        assert!(inst.config.is_extended());
        assert_eq!(inst.config.counts(), &[9, -2]);
        assert_eq!(inst.demand(), Some(Demand::new(vec![1, 0]).unwrap()));
        let again = Instance::parse(&inst.to_toml()).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn errors_name_lines() {
        let cases = [
            ("vertices = [\"a\", \"b\"]\nedges = [\n  [\"a\", \"b\"],\n  [\"a\", \"z\"],\n]\n", "line 4"),
            ("vertices = [\"a\", \"b\"]\nedges = [[\"a\", \"b\"]]\n[config]\nq = 3\n", "line 4"),
            ("vertices = [\"a\", \"b\"]\nedges = [[\"a\", \"b\"]]\n[demand]\na = -1\n", "line 4"),
            ("vertices = [\"a\", \"b\"]\nedges = [[\"a\", \"b\"]]\ndemand_kind = \"reach:q\"\n", "line 3"),
            ("vertices = [\"a\", \"b\"]\nedges = [[\"a\", \"b\"]\n", "line 2"),
            ("vertices = [\"a\", \"a\"]\n", "line 1"),
            ("vertices = [\"a\", \"b\"]\nedges = [\n  [\"a\", \"b\"],\n  [\"b\", \"a\"],\n]\n", "line 4"),
            ("vertices = [\"a\", \"b\"]\nedges = [\n  [\"a\", \"b\"],\n  [\"b\", \"b\"],\n]\n", "line 4"),
        ];
        for (text, line) in cases {
            let err = Instance::parse(text).unwrap_err().to_string();
            assert!(err.contains(line), "{err} should mention {line}");
        }
        let err = Instance::parse("vertices = [\"a\", \"b\"]\n").unwrap_err();
        assert_eq!(err, PebbleError::InvalidInput(PebbleError::Disconnected.to_string()));
    }

    #[test]
    fn certificates() {
        let g = Graph::path(3).unwrap();
        let ml = MoveList::from_pairs([((0, 1), 3), ((1, 2), 1)]);
        let text = write_certificate(&g, &ml);
        assert_eq!(text, "[[moves]]\nfrom = \"v1\"\nto = \"v2\"\ncount = 3\n\n[[moves]]\nfrom = \"v2\"\nto = \"v3\"\ncount = 1\n");
        assert_eq!(parse_certificate(&text, &g).unwrap(), ml);
        assert_eq!(parse_certificate(&write_certificate(&g, &MoveList::new()), &g).unwrap(), MoveList::new());
        let bad = [
            "[[moves]]\nfrom = \"v1\"\nto = \"v3\"\ncount = 1\n",
            "[[moves]]\nfrom = \"v1\"\nto = \"v2\"\ncount = 0\n",
            "[[moves]]\nfrom = \"v1\"\nto = \"v9\"\ncount = 1\n",
        ];
        for text in bad {
            assert!(parse_certificate(text, &g).unwrap_err().to_string().contains("line 1"), "{text}");
        }
        let dup = format!("{text}\n[[moves]]\nfrom = \"v1\"\nto = \"v2\"\ncount = 1\n");
        assert!(parse_certificate(&dup, &g).unwrap_err().to_string().contains("line 11"));
    }

    #[test]
    fn roles_round_trip() {
        let roles = [
            Role::Element(3),
            Role::Set(0),
            Role::SetPrime(1),
            Role::SetDoublePrime(2),
            Role::SetTriplePrime(4),
            Role::Hub,
            Role::Path(2),
            Role::Sink,
            Role::Copy(0),
            Role::Grid(1, 2),
            Role::Tail(0),
        ];
        for r in roles {
            assert_eq!(parse_role(&role_code(&r)), Some(r));
        }
        assert_eq!(parse_role("v:1"), None);
        assert_eq!(parse_role("Q:1"), None);
    }

    #[test]
    fn reduced_instances_round_trip() {
        let x4c = X4CInstance::from_one_based(2, &[[1, 2, 3, 4], [3, 4, 5, 6], [5, 6, 7, 8]]).unwrap();
        let c = Configuration::new(vec![0, 2, 1, 3]).unwrap();
        let reduced = [
            reduce_to_cover_solvability(&x4c).unwrap(),
            reduce_to_number_threshold(&x4c).unwrap(),
            reduce_cover_to_canonical(&Graph::path(4).unwrap(), &c).unwrap(),
            reduce_cover_to_canonical(&Graph::path(2).unwrap(), &Configuration::new(vec![4, 0]).unwrap()).unwrap(),
        ];
        for r in reduced {
            let text = Instance::from_reduced(&r).to_toml();
            let back = Instance::parse(&text).unwrap();
            assert_eq!(back.to_reduced().unwrap(), r);
            assert_eq!(back.to_toml(), text);
        }
    }
}
