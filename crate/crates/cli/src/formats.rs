//! On-disk formats: `.matroid` JSON records and built-in matroid names.

use mtv_core::{validate_matroid, FaceSet, LinearField, Matroid, MatroidSpec, Rational};
use mtv_core::tverberg::parse_rational;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct MatroidFile {
    #[serde(rename = "format-version")]
    pub format_version: u32,
    #[serde(flatten)]
    pub body: MatroidBody,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum MatroidBody {
    Uniform {
        rank: usize,
        n: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    /// `field` is `"Q"` or `"GF(p)"`; entries are integers or `p/q` strings.
    Linear {
        field: String,
        rows: usize,
        columns: Vec<Vec<String>>,
    },
    Partition {
        n: usize,
        blocks: Vec<Vec<usize>>,
        capacities: Vec<usize>,
    },
    Explicit {
        n: usize,
        maximal: Vec<Vec<usize>>,
    },
}

fn parse_field(s: &str) -> Result<LinearField, String> {
    let s = s.trim();
    if s == "Q" {
        return Ok(LinearField::Rational);
    }
    s.strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|p| p.trim().parse().ok())
        .map(LinearField::Prime)
        .ok_or_else(|| format!("unknown field {s:?}, expected \"Q\" or \"GF(p)\""))
}

fn field_name(f: LinearField) -> String {
    match f {
        LinearField::Rational => "Q".into(),
        LinearField::Prime(p) => format!("GF({p})"),
    }
}

impl MatroidFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        let file: MatroidFile = serde_json::from_str(text).map_err(|e| format!("matroid file: {e}"))?;
        if file.format_version != FORMAT_VERSION {
            return Err(format!("unsupported matroid format version {}", file.format_version));
        }
        Ok(file)
    }

    pub fn from_spec(spec: &MatroidSpec) -> Self {
        let body = match spec {
            MatroidSpec::Uniform { rank, n } => MatroidBody::Uniform { rank: *rank, n: *n },
            MatroidSpec::Graphic { vertices, edges } => MatroidBody::Graphic {
                vertices: *vertices,
                edges: edges.clone(),
            },
            MatroidSpec::Linear { field, rows, columns } => MatroidBody::Linear {
                field: field_name(*field),
                rows: *rows,
                columns: columns
                    .iter()
                    .map(|c| c.iter().map(Rational::to_string).collect())
                    .collect(),
            },
            MatroidSpec::Partition {
                n,
                blocks,
                capacities,
            } => MatroidBody::Partition {
                n: *n,
                blocks: blocks.clone(),
                capacities: capacities.clone(),
            },
            MatroidSpec::Explicit { n, maximal } => MatroidBody::Explicit {
                n: *n,
                maximal: maximal.iter().map(|f| f.as_slice().to_vec()).collect(),
            },
        };
        MatroidFile {
            format_version: FORMAT_VERSION,
            body,
        }
    }

    #[cfg(test)]
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matroid files serialize")
    }

    /// Builds the matroid. Explicit families must satisfy the exchange axiom.
    pub fn into_matroid(self) -> Result<Matroid, String> {
        let spec = match self.body {
            MatroidBody::Uniform { rank, n } => MatroidSpec::Uniform { rank, n },
            MatroidBody::Graphic { vertices, edges } => MatroidSpec::Graphic { vertices, edges },
            MatroidBody::Linear { field, rows, columns } => MatroidSpec::Linear {
                field: parse_field(&field)?,
                rows,
                columns: columns
                    .iter()
                    .map(|c| c.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?,
            },
            MatroidBody::Partition {
                n,
                blocks,
                capacities,
            } => MatroidSpec::Partition {
                n,
                blocks,
                capacities,
            },
            MatroidBody::Explicit { n, maximal } => {
                let maximal: Vec<FaceSet> = maximal
                    .into_iter()
                    .map(|f| {
                        let mut f = f;
                        f.sort_unstable();
                        FaceSet::from_sorted(f).map_err(|e| e.to_string())
                    })
                    .collect::<Result<_, _>>()?;
                if maximal.iter().any(|f| f.max_element().is_some_and(|e| e >= n)) {
                    return Err(format!("explicit matroid lists an element outside 0..{n}"));
                }
                if let Some((i, j)) = validate_matroid(n, &maximal).violation {
                    return Err(format!("explicit family violates the exchange axiom at {i:?}, {j:?}"));
                }
                MatroidSpec::Explicit { n, maximal }
            }
        };
        Matroid::new(spec).map_err(|e| e.to_string())
    }
}

/// Built-in matroids by name: `uniform:R,N`, `complete:V`, `colourful:R,D`.
pub fn builtin(name: &str) -> Result<Matroid, String> {
    let (kind, args) = name
        .split_once(':')
        .ok_or_else(|| format!("bad built-in {name:?}, expected kind:args"))?;
    let nums = args
        .split(',')
        .map(|a| a.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| format!("bad built-in arguments {args:?}"))?;
    match (kind, nums.as_slice()) {
        ("uniform", &[r, n]) => Matroid::uniform(r, n).map_err(|e| e.to_string()),
        ("complete", &[v]) => Ok(Matroid::complete_graph(v)),
        ("colourful", &[r, d]) => mtv_core::colourful_complex(r, d).map_err(|e| e.to_string()),
        _ => Err(format!("unknown built-in {name:?}")),
    }
}

/// Parses `0,1;2,3` into sets; empty parts are allowed.
pub fn parse_sets(s: &str) -> Result<Vec<FaceSet>, String> {
    s.split(';')
        .map(|part| {
            let mut ids = part
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| format!("bad element id {t:?}")))
                .collect::<Result<Vec<_>, _>>()?;
            ids.sort_unstable();
            FaceSet::from_sorted(ids).map_err(|_| format!("repeated element in {part:?}"))
        })
        .collect()
}
