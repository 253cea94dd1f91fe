//! Acyclic dg quivers and their Euler forms.

use std::collections::HashMap;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{ParseError, QuiverError};
use crate::rational::Rational;

/// Name of the framing vertex added by [`framed_quiver`].
pub const FRAMING_VERTEX: &str = "inf";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub src: usize,
    pub tgt: usize,
    /// Cohomological degree, always `<= 0`.
    pub deg: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgQuiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// Dimension vector, dense in vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DimVector(pub Vec<i64>);

/// Framing vector, dense in vertex order, not identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramingVector(pub Vec<i64>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVector(pub Vec<Rational>);

impl FramingVector {
    pub fn new(v: Vec<i64>) -> Result<Self, QuiverError> {
        if v.iter().all(|&x| x == 0) || v.iter().any(|&x| x < 0) {
            return Err(QuiverError::ZeroDimension);
        }
        Ok(FramingVector(v))
    }
}

impl DgQuiver {
    /// Builds and validates a quiver from vertex ids and `(src, tgt, deg)` arrows.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, i64)]) -> Result<Self, QuiverError> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let mut out = Vec::with_capacity(arrows.len());
        for (k, (s, t, deg)) in arrows.iter().enumerate() {
            let lookup = |v: &S| {
                index.get(v.as_ref()).copied().ok_or_else(|| QuiverError::DanglingEndpoint {
                    index: k,
                    vertex: v.as_ref().to_string(),
                })
            };
            out.push(Arrow {
                src: lookup(s)?,
                tgt: lookup(t)?,
                deg: *deg,
            });
        }
        let q = DgQuiver {
            vertices,
            arrows: out,
        };
        q.validate()?;
        Ok(q)
    }

    /// Checks degrees and acyclicity.
    pub fn validate(&self) -> Result<(), QuiverError> {
        for (index, a) in self.arrows.iter().enumerate() {
            if a.src >= self.vertices.len() || a.tgt >= self.vertices.len() {
                return Err(QuiverError::DanglingEndpoint {
                    index,
                    vertex: a.src.max(a.tgt).to_string(),
                });
            }
            if a.deg > 0 {
                return Err(QuiverError::PositiveDegree { index, deg: a.deg });
            }
        }
        // Kahn's algorithm; anything left over lies on or behind a cycle.
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.tgt] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.src == v) {
                indeg[a.tgt] -= 1;
                if indeg[a.tgt] == 0 {
                    stack.push(a.tgt);
                }
            }
        }
        if seen < n {
            let v = (0..n).find(|&v| indeg[v] > 0).unwrap();
            return Err(QuiverError::Cycle(self.vertices[v].clone()));
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize, QuiverError> {
        self.vertices
            .iter()
            .position(|v| v == id)
            .ok_or_else(|| QuiverError::UnknownVertex(id.to_string()))
    }

    /// All arrows have degree 0 or -1.
    pub fn is_quasi_smooth(&self) -> bool {
        self.arrows.iter().all(|a| a.deg >= -1)
    }

    /// `{"vertices": [...], "arrows": [{"src", "tgt", "deg"}]}`
    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices,
            "arrows": self.arrows.iter().map(|a| json!({
                "src": self.vertices[a.src],
                "tgt": self.vertices[a.tgt],
                "deg": a.deg,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, crate::Error> {
        let bad = |m: &str| ParseError::Json(format!("quiver: {m}"));
        let id = |x: &Value| -> Option<String> {
            match x {
                Value::String(s) => Some(s.clone()),
                Value::Number(n) => Some(n.to_string()),
                _ => None,
            }
        };
        let verts = v
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `vertices`"))?
            .iter()
            .map(id)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| bad("vertex ids must be strings or numbers"))?;
        let arrows = match v.get("arrows") {
            None => Vec::new(),
            Some(a) => a
                .as_array()
                .ok_or_else(|| bad("`arrows` must be a list"))?
                .iter()
                .map(|a| {
                    let s = a.get("src").and_then(id)?;
                    let t = a.get("tgt").and_then(id)?;
                    let d = match a.get("deg") {
                        None => 0,
                        Some(d) => d.as_i64()?,
                    };
                    Some((s, t, d))
                })
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| bad("arrow needs `src`, `tgt` and integer `deg`"))?,
        };
        Ok(DgQuiver::new(&verts, &arrows)?)
    }

    /// Parses a dimension vector given as `1,0,2` or as a JSON object keyed by vertex.
    pub fn parse_dim(&self, s: &str) -> Result<DimVector, crate::Error> {
        let t = s.trim();
        let d = if t.starts_with('{') {
            let v: Value =
                serde_json::from_str(t).map_err(|e| ParseError::Json(e.to_string()))?;
            let obj = v
                .as_object()
                .ok_or_else(|| ParseError::Json("dimension vector".into()))?;
            let mut d = vec![0; self.num_vertices()];
            for (k, x) in obj {
                let i = self.vertex_index(k)?;
                d[i] = x
                    .as_i64()
                    .ok_or_else(|| ParseError::Json(format!("entry for `{k}`")))?;
            }
            d
        } else {
            let t = t.trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
            t.split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| ParseError::Expression(s.to_string()))?
        };
        self.check_len(d.len())?;
        Ok(DimVector(d))
    }

    fn check_len(&self, got: usize) -> Result<(), QuiverError> {
        if got != self.num_vertices() {
            return Err(QuiverError::DimensionMismatch {
                expected: self.num_vertices(),
                got,
            });
        }
        Ok(())
    }
}

fn edge_sign(deg: i64) -> i64 {
    if deg.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `χ(d, d') = sum_v d_v d'_v - sum_e (-1)^{|e|} d_{s(e)} d'_{t(e)}`.
pub fn euler_form(q: &DgQuiver, d1: &DimVector, d2: &DimVector) -> Result<i64, QuiverError> {
    q.check_len(d1.0.len())?;
    q.check_len(d2.0.len())?;
    let diag: i64 = d1.0.iter().zip(&d2.0).map(|(a, b)| a * b).sum();
    let edges: i64 = q
        .arrows
        .iter()
        .map(|a| edge_sign(a.deg) * d1.0[a.src] * d2.0[a.tgt])
        .sum();
    Ok(diag - edges)
}

/// `χ(d, d') + χ(d', d)`.
pub fn euler_sym(q: &DgQuiver, d1: &DimVector, d2: &DimVector) -> Result<i64, QuiverError> {
    Ok(euler_form(q, d1, d2)? + euler_form(q, d2, d1)?)
}

/// Gram matrix `χ(e_v, e_w)` in vertex order.
pub fn euler_matrix(q: &DgQuiver) -> Vec<Vec<i64>> {
    let n = q.num_vertices();
    let unit = |i: usize| DimVector((0..n).map(|j| i64::from(i == j)).collect());
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| euler_form(q, &unit(i), &unit(j)).expect("unit vectors fit"))
                .collect()
        })
        .collect()
}

/// `χ(d1, d2) - f1·d2`.
pub fn framed_euler(
    q: &DgQuiver,
    f1: &FramingVector,
    d1: &DimVector,
    f2: &FramingVector,
    d2: &DimVector,
) -> Result<i64, QuiverError> {
    q.check_len(f1.0.len())?;
    q.check_len(f2.0.len())?;
    let pair: i64 = f1.0.iter().zip(&d2.0).map(|(a, b)| a * b).sum();
    Ok(euler_form(q, d1, d2)? - pair)
}

/// `θ(d) / sum_v d_v`.
pub fn slope(q: &DgQuiver, theta: &StabilityVector, d: &DimVector) -> Result<Rational, QuiverError> {
    q.check_len(theta.0.len())?;
    q.check_len(d.0.len())?;
    let rank: i64 = d.0.iter().sum();
    if rank == 0 {
        return Err(QuiverError::ZeroDimension);
    }
    let num = theta
        .0
        .iter()
        .zip(&d.0)
        .fold(Rational::zero(), |acc, (t, x)| acc + t * Rational::from_integer((*x).into()));
    Ok(num / Rational::from_integer(rank.into()))
}

/// Adds a vertex `inf` in front with `f_v` degree-0 arrows `inf -> v`.
pub fn framed_quiver(q: &DgQuiver, f: &FramingVector) -> Result<DgQuiver, QuiverError> {
    q.check_len(f.0.len())?;
    let mut vertices = vec![FRAMING_VERTEX.to_string()];
    vertices.extend(q.vertices.iter().cloned());
    let mut arrows = Vec::new();
    for (v, &k) in f.0.iter().enumerate() {
        for _ in 0..k {
            arrows.push(Arrow {
                src: 0,
                tgt: v + 1,
                deg: 0,
            });
        }
    }
    arrows.extend(q.arrows.iter().map(|a| Arrow {
        src: a.src + 1,
        tgt: a.tgt + 1,
        deg: a.deg,
    }));
    let out = DgQuiver { vertices, arrows };
    out.validate()?;
    Ok(out)
}

/// `1 - χ(d, d)`, defined for quasi-smooth quivers.
pub fn virtual_dim(q: &DgQuiver, d: &DimVector) -> Result<i64, QuiverError> {
    if !q.is_quasi_smooth() {
        return Err(QuiverError::NotQuasiSmooth);
    }
    Ok(1 - euler_form(q, d, d)?)
}

/// Built-in quivers: `a1`, `linear(l)`, `kronecker(n)`, `beilinson_p2`, `p1xp1`.
pub fn builtin(name: &str) -> Result<DgQuiver, QuiverError> {
    let unknown = || QuiverError::UnknownBuiltin(name.to_string());
    let n = name.trim().to_ascii_lowercase();
    let arg = |prefix: &str| -> Option<usize> {
        let rest = n.strip_prefix(prefix)?;
        let rest = rest.trim_start_matches(['(', ':', '_']).trim_end_matches(')');
        rest.parse().ok()
    };
    if n == "a1" {
        return Ok(linear(1));
    }
    if n == "beilinson_p2" || n == "p2" {
        return Ok(beilinson_p2());
    }
    if n == "p1xp1" {
        return Ok(p1xp1());
    }
    if let Some(l) = arg("linear") {
        if l == 0 {
            return Err(unknown());
        }
        return Ok(linear(l));
    }
    if let Some(k) = arg("kronecker") {
        return Ok(kronecker(k));
    }
    Err(unknown())
}

fn build(vertices: &[&str], arrows: Vec<(&str, &str, i64)>) -> DgQuiver {
    DgQuiver::new(vertices, &arrows).expect("builtin quiver is valid")
}

fn repeat<'a>(n: usize, s: &'a str, t: &'a str, deg: i64) -> impl Iterator<Item = (&'a str, &'a str, i64)> {
    std::iter::repeat_n((s, t, deg), n)
}

/// `1 -> 2 -> ... -> l`.
pub fn linear(l: usize) -> DgQuiver {
    let names: Vec<String> = (1..=l).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, i64)> = (1..l)
        .map(|i| (i.to_string(), (i + 1).to_string(), 0))
        .collect();
    DgQuiver::new(&names, &arrows).expect("linear quiver is valid")
}

/// `n` arrows `inf -> 1`.
pub fn kronecker(n: usize) -> DgQuiver {
    build(&[FRAMING_VERTEX, "1"], repeat(n, FRAMING_VERTEX, "1", 0).collect())
}

/// Three arrows `1 -> 2`, three `2 -> 3`, six degree -1 relations `1 -> 3`.
pub fn beilinson_p2() -> DgQuiver {
    let arrows = repeat(3, "1", "2", 0)
        .chain(repeat(3, "2", "3", 0))
        .chain(repeat(6, "1", "3", -1))
        .collect();
    build(&["1", "2", "3"], arrows)
}

/// Square with doubled arrows and four degree -1 relations `1 -> 4`.
pub fn p1xp1() -> DgQuiver {
    let arrows = repeat(2, "1", "2", 0)
        .chain(repeat(2, "1", "3", 0))
        .chain(repeat(2, "2", "4", 0))
        .chain(repeat(2, "3", "4", 0))
        .chain(repeat(4, "1", "4", -1))
        .collect();
    build(&["1", "2", "3", "4"], arrows)
}
