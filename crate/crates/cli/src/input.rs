//! Structures named by builder references or given as dense JSON tables.

use hopf_galois::builders::{
    circle_hopf, dual_group_algebra, finite_field_ext, group_algebra, paper_example, z2_quadratic, FieldExtension,
    GradedAlgebra, GroupTable, PaperExample,
};
use hopf_galois::extensions::{ComoduleAlgebra, ModuleAlgebra};
use hopf_galois::hopf::{AlgebraStr, Bialgebra, CoalgebraStr, HopfAlgebra};
use hopf_galois::linalg::sparse::{self, Acc};
use hopf_galois::{Error, Field, Mat, Result, SVec, Scalar};
use serde_json::Value;

/// Which group, if any, a Hopf algebra was built from.
#[derive(Clone, Debug)]
pub struct GroupOrigin {
    pub group: GroupTable,
    /// `k[G]*` rather than `k[G]`.
    pub dual: bool,
}

pub enum Subject {
    Algebra(AlgebraStr),
    Coalgebra(CoalgebraStr),
    Bialgebra(Bialgebra),
    Hopf { hopf: HopfAlgebra, origin: Option<GroupOrigin> },
    Comodule(ComoduleAlgebra),
    Module(ModuleAlgebra),
    Paper(Box<PaperExample>),
    FieldExt(Box<FieldExtension>),
    Graded(Box<GradedAlgebra>),
}

impl Subject {
    pub fn kind(&self) -> &'static str {
        match self {
            Subject::Algebra(_) => "algebra",
            Subject::Coalgebra(_) => "coalgebra",
            Subject::Bialgebra(_) => "bialgebra",
            Subject::Hopf { .. } => "hopf",
            Subject::Comodule(_) => "comodule_algebra",
            Subject::Module(_) => "module_algebra",
            Subject::Paper(_) => "paper_example",
            Subject::FieldExt(_) => "finite_field_ext",
            Subject::Graded(_) => "graded_algebra",
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Subject::Algebra(a) => a.field,
            Subject::Coalgebra(c) => c.field,
            Subject::Bialgebra(b) => b.alg.field,
            Subject::Hopf { hopf, .. } => hopf.field(),
            Subject::Comodule(a) => a.field(),
            Subject::Module(m) => m.field(),
            Subject::Paper(p) => p.module.field(),
            Subject::FieldExt(e) => e.field(),
            Subject::Graded(g) => g.comodule.field(),
        }
    }

    /// The acting or coacting Hopf algebra.
    pub fn hopf(&self) -> Option<&HopfAlgebra> {
        match self {
            Subject::Hopf { hopf, .. } => Some(hopf),
            Subject::Comodule(a) => Some(&a.hopf),
            Subject::Module(m) => Some(&m.hopf),
            Subject::Paper(p) => Some(&p.module.hopf),
            Subject::FieldExt(e) => Some(&e.comodule.hopf),
            Subject::Graded(g) => Some(&g.comodule.hopf),
            _ => None,
        }
    }

    /// Group data behind [`Subject::hopf`].
    pub fn origin(&self) -> Option<GroupOrigin> {
        match self {
            Subject::Hopf { origin, .. } => origin.clone(),
            Subject::FieldExt(e) => Some(GroupOrigin { group: e.group.clone(), dual: true }),
            Subject::Graded(g) => Some(GroupOrigin { group: g.group.clone(), dual: false }),
            _ => None,
        }
    }

    /// The comodule algebra used by the extension commands; `H` coacts on itself.
    pub fn comodule(&self) -> Result<ComoduleAlgebra> {
        match self {
            Subject::Hopf { hopf, .. } => Ok(ComoduleAlgebra::regular(hopf)),
            Subject::Comodule(a) => Ok(a.clone()),
            Subject::Module(m) => m.to_comodule(),
            Subject::Paper(p) => p.module.to_comodule(),
            Subject::FieldExt(e) => Ok(e.comodule.clone()),
            Subject::Graded(g) => Ok(g.comodule.clone()),
            _ => Err(Error::Input(format!("{} is not an extension", self.kind()))),
        }
    }

    pub fn module(&self) -> Result<&ModuleAlgebra> {
        match self {
            Subject::Module(m) => Ok(m),
            Subject::Paper(p) => Ok(&p.module),
            Subject::FieldExt(e) => Ok(&e.module),
            _ => Err(Error::Input(format!("{} is not a module algebra", self.kind()))),
        }
    }
}

/// Resolves `--builder` (a name or a JSON builder reference) or `--input` (a file).
pub fn load(builder: Option<&str>, input: Option<&str>, group: Option<&str>, field: Option<Field>) -> Result<Subject> {
    let value = match (builder, input) {
        (Some(b), None) => {
            if b.trim_start().starts_with('{') {
                serde_json::from_str(b).map_err(|e| Error::Parse(e.to_string()))?
            } else {
                let mut obj = serde_json::Map::new();
                obj.insert("builder".into(), Value::String(b.into()));
                if let Some(g) = group {
                    obj.insert("group".into(), Value::String(g.into()));
                }
                Value::Object(obj)
            }
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))?;
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))?
        }
        _ => return Err(Error::Input("give exactly one of --builder and --input".into())),
    };
    from_value(&value, field)
}

pub fn from_value(v: &Value, field: Option<Field>) -> Result<Subject> {
    if v.get("builder").is_some() {
        return build(v, field);
    }
    let field = match (field, v.get("field")) {
        (Some(f), _) => f,
        (None, Some(Value::String(s))) => Field::from_label(s)?,
        (None, Some(Value::Object(o))) => match o.get("Fp").and_then(Value::as_u64) {
            Some(p) => Field::fp(p)?,
            None => return Err(Error::Input("'field' object must be {\"Fp\": p}".into())),
        },
        (None, None) => Field::Q,
        (None, Some(_)) => return Err(Error::Input("'field' must be \"Q\", \"Qi\", \"Fp:<p>\" or {\"Fp\": p}".into())),
    };
    let kind = match v.get("kind") {
        Some(_) => str_field(v, "kind")?,
        None if v.get("antipode").is_some() => "hopf",
        None if v.get("mult").is_some() && v.get("comult").is_some() => "bialgebra",
        None if v.get("comult").is_some() => "coalgebra",
        None => "algebra",
    };
    match kind {
        "algebra" => Ok(Subject::Algebra(algebra(v, field)?)),
        "coalgebra" => Ok(Subject::Coalgebra(coalgebra(v, field)?)),
        "bialgebra" => Ok(Subject::Bialgebra(Bialgebra::new(algebra(v, field)?, coalgebra(v, field)?)?)),
        "hopf" => Ok(Subject::Hopf { hopf: hopf(v, field)?, origin: None }),
        "comodule_algebra" | "module_algebra" => {
            let a = algebra(get(v, "algebra")?, field)?;
            let h = match from_value(get(v, "hopf")?, Some(field))? {
                Subject::Hopf { hopf, .. } => hopf,
                other => return Err(Error::Input(format!("'hopf' describes a {}", other.kind()))),
            };
            let (n, m) = (a.dim, h.dim());
            if kind == "comodule_algebra" {
                // coaction[x][a][h]: coefficient of e_a ⊗ e_h in δ(e_x)
                let rows = matrices(get(v, "coaction")?, n, n, m, field)?;
                let coaction = rows.into_iter().map(|rows| flatten(&rows, m)).collect();
                Ok(Subject::Comodule(ComoduleAlgebra::new(a, h, coaction)?))
            } else {
                // action[h][x]: e_h · e_x
                let rows = matrices(get(v, "action")?, m, n, n, field)?;
                let action = rows.into_iter().flatten().map(|r| sparse::from_dense(&r)).collect();
                Ok(Subject::Module(ModuleAlgebra::new(a, h, action)?))
            }
        }
        other => Err(Error::Input(format!("unknown kind '{other}'"))),
    }
}

fn build(v: &Value, field: Option<Field>) -> Result<Subject> {
    let name = str_field(v, "builder")?;
    let group = || -> Result<GroupTable> {
        match get(v, "group")? {
            Value::String(s) => GroupTable::by_name(s),
            Value::Array(_) => {
                let mult: Vec<Vec<usize>> = serde_json::from_value(v["group"].clone()).map_err(|e| Error::Parse(e.to_string()))?;
                GroupTable::new(mult, vec![])
            }
            Value::Object(o) => {
                let mult: Vec<Vec<usize>> = o
                    .get("mult")
                    .cloned()
                    .map(serde_json::from_value)
                    .transpose()
                    .map_err(|e| Error::Parse(e.to_string()))?
                    .ok_or_else(|| Error::Input("group table needs 'mult'".into()))?;
                let names: Vec<String> = o.get("names").cloned().map(serde_json::from_value).transpose().map_err(|e| Error::Parse(e.to_string()))?.unwrap_or_default();
                GroupTable::new(mult, names)
            }
            _ => Err(Error::Input("'group' must be a name or a table".into())),
        }
    };
    let fixed = |f: Field| match field {
        Some(g) if g != f => Err(Error::Input(format!("builder '{name}' is defined over {f}, not {g}"))),
        _ => Ok(()),
    };
    match name {
        "circle_hopf" => Ok(Subject::Hopf { hopf: circle_hopf(field.unwrap_or(Field::Q))?, origin: None }),
        "group_algebra" | "dual_group_algebra" => {
            let g = group()?;
            let f = field.unwrap_or(Field::Q);
            let dual = name == "dual_group_algebra";
            let hopf = if dual { dual_group_algebra(&g, f) } else { group_algebra(&g, f) };
            Ok(Subject::Hopf { hopf, origin: Some(GroupOrigin { group: g, dual }) })
        }
        "paper_example" => {
            fixed(Field::Qi)?;
            Ok(Subject::Paper(Box::new(paper_example()?)))
        }
        "finite_field_ext" => {
            let p = v.get("p").and_then(Value::as_u64).ok_or_else(|| Error::Input("'p' must be a prime".into()))?;
            let poly: Vec<u64> = serde_json::from_value(get(v, "poly")?.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            fixed(Field::fp(p)?)?;
            Ok(Subject::FieldExt(Box::new(finite_field_ext(p, &poly)?)))
        }
        "z2_quadratic" => {
            let f = field.unwrap_or(Field::Q);
            let lambda = scalar(v.get("lambda").unwrap_or(&Value::from(1)), f)?;
            Ok(Subject::Graded(Box::new(z2_quadratic(f, lambda)?)))
        }
        other => Err(Error::Input(format!("unknown builder '{other}'"))),
    }
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Input(format!("missing '{key}'")))
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    get(v, key)?.as_str().ok_or_else(|| Error::Input(format!("'{key}' must be a string")))
}

/// An integer, or a string in the scalar syntax (`3/4`, `1+2*i`).
pub fn scalar(v: &Value, f: Field) -> Result<Scalar> {
    match v {
        Value::Number(n) => n.as_i64().map(|x| f.int(x)).ok_or_else(|| Error::Parse(format!("{n} is not an integer"))),
        Value::String(s) => f.parse(s),
        _ => Err(Error::Parse(format!("{v} is not a scalar"))),
    }
}

fn vector(v: &Value, n: usize, f: Field) -> Result<Vec<Scalar>> {
    let xs = v.as_array().ok_or_else(|| Error::Input("expected an array of scalars".into()))?;
    if xs.len() != n {
        return Err(Error::Dimension(format!("vector of length {} where {n} is needed", xs.len())));
    }
    xs.iter().map(|x| scalar(x, f)).collect()
}

fn rows(v: &Value, r: usize, c: usize, f: Field) -> Result<Vec<Vec<Scalar>>> {
    let xs = v.as_array().ok_or_else(|| Error::Input("expected an array of rows".into()))?;
    if xs.len() != r {
        return Err(Error::Dimension(format!("{} rows where {r} are needed", xs.len())));
    }
    xs.iter().map(|x| vector(x, c, f)).collect()
}

fn matrices(v: &Value, k: usize, r: usize, c: usize, f: Field) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let xs = v.as_array().ok_or_else(|| Error::Input("expected an array of matrices".into()))?;
    if xs.len() != k {
        return Err(Error::Dimension(format!("{} matrices where {k} are needed", xs.len())));
    }
    xs.iter().map(|x| rows(x, r, c, f)).collect()
}

fn flatten(rows: &[Vec<Scalar>], width: usize) -> SVec {
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                out.push((i * width + j, x.clone()));
            }
        }
    }
    out
}

fn dim(v: &Value) -> Result<usize> {
    get(v, "dim")?.as_u64().map(|d| d as usize).ok_or_else(|| Error::Input("'dim' must be a natural number".into()))
}

/// Sparse entries `[i, j, .., "scalar"]` unless `mult`/`comult` are nested dense arrays.
fn is_sparse(v: &Value) -> bool {
    for key in ["mult", "comult"] {
        if let Some(first) = v.get(key).and_then(Value::as_array).and_then(|xs| xs.first()) {
            return first.as_array().and_then(|e| e.first()).is_none_or(|x| !x.is_array());
        }
    }
    true
}

/// Sparse tensor entries under `key`; an omitted key means zero.
fn entries(v: &Value, key: &str, arity: usize, n: usize, f: Field) -> Result<Vec<(Vec<usize>, Scalar)>> {
    let Some(xs) = v.get(key) else { return Ok(Vec::new()) };
    let xs = xs.as_array().ok_or_else(|| Error::Input(format!("'{key}' must be an array of entries")))?;
    xs.iter()
        .map(|e| {
            let e = e.as_array().filter(|e| e.len() == arity + 1).ok_or_else(|| Error::Input(format!("'{key}' entries have {arity} indices and a scalar")))?;
            let idx = e[..arity]
                .iter()
                .map(|x| x.as_u64().map(|i| i as usize).filter(|&i| i < n).ok_or_else(|| Error::Dimension(format!("'{key}' index {x} out of range"))))
                .collect::<Result<Vec<_>>>()?;
            Ok((idx, scalar(&e[arity], f)?))
        })
        .collect()
}

fn accumulate(slots: usize, items: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Vec<SVec> {
    let mut accs: Vec<Acc> = (0..slots).map(|_| Acc::new()).collect();
    for (slot, i, x) in items {
        accs[slot].add(i, x);
    }
    accs.into_iter().map(Acc::finish).collect()
}

/// `e_i e_j`: dense `mult[i][j]` or sparse `[i, j, k, s]`.
fn algebra(v: &Value, f: Field) -> Result<AlgebraStr> {
    let n = dim(v)?;
    let mult = if is_sparse(v) {
        accumulate(n * n, entries(v, "mult", 3, n, f)?.into_iter().map(|(ix, x)| (ix[0] * n + ix[1], ix[2], x)))
    } else {
        matrices(get(v, "mult")?, n, n, n, f)?.into_iter().flatten().map(|r| sparse::from_dense(&r)).collect()
    };
    AlgebraStr::new(f, n, mult, sparse::from_dense(&vector(get(v, "unit")?, n, f)?))
}

/// `Δ(e_i)`: dense `comult[i][j][k]` or sparse `[i, j, k, s]`, the coefficient of `e_j ⊗ e_k`.
fn coalgebra(v: &Value, f: Field) -> Result<CoalgebraStr> {
    let n = dim(v)?;
    let comult = if is_sparse(v) {
        accumulate(n, entries(v, "comult", 3, n, f)?.into_iter().map(|(ix, x)| (ix[0], ix[1] * n + ix[2], x)))
    } else {
        matrices(get(v, "comult")?, n, n, n, f)?.iter().map(|m| flatten(m, n)).collect()
    };
    CoalgebraStr::new(f, n, comult, vector(get(v, "counit")?, n, f)?)
}

/// `S(e_i)`: dense `antipode[i]` or sparse `[i, j, s]`.
fn hopf(v: &Value, f: Field) -> Result<HopfAlgebra> {
    let n = dim(v)?;
    let cols = if is_sparse(v) {
        accumulate(n, entries(v, "antipode", 2, n, f)?.into_iter().map(|(ix, x)| (ix[0], ix[1], x)))
    } else {
        rows(get(v, "antipode")?, n, n, f)?.iter().map(|r| sparse::from_dense(r)).collect()
    };
    let antipode = Mat::from_fn(f, n, n, |r, c| sparse::get(&cols[c], r).cloned().unwrap_or_else(|| f.zero()));
    HopfAlgebra::new(algebra(v, f)?, coalgebra(v, f)?, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn z2() -> Value {
        json!({
            "kind": "hopf", "dim": 2,
            "unit": [1, 0],
            "mult": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
            "comult": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
            "counit": [1, 1],
            "antipode": [[1, 0], [0, 1]]
        })
    }

    #[test]
    fn sparse_entries_match_dense() {
        let v = json!({
            "field": {"Fp": 3}, "dim": 2,
            "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]],
            "unit": ["1", "0"],
            "comult": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
            "counit": ["1", "1"],
            "antipode": [[0, 0, "1"], [1, 1, "1"]]
        });
        let Subject::Hopf { hopf: sparse_h, .. } = from_value(&v, None).unwrap() else { panic!() };
        let Subject::Hopf { hopf: dense_h, .. } = from_value(&z2(), Some(Field::Fp(3))).unwrap() else { panic!() };
        assert_eq!(sparse_h, dense_h);
        let mut zero_antipode = v.clone();
        zero_antipode.as_object_mut().unwrap().remove("antipode");
        zero_antipode["kind"] = json!("hopf");
        let Subject::Hopf { hopf, .. } = from_value(&zero_antipode, None).unwrap() else { panic!() };
        assert!(hopf.antipode.is_zero());
        let mut bad = v.clone();
        bad["mult"][0] = json!([0, 0, 2, "1"]);
        assert!(matches!(from_value(&bad, None), Err(Error::Dimension(_))));
    }

    #[test]
    fn raw_hopf_matches_builder() {
        let Subject::Hopf { hopf, .. } = from_value(&z2(), None).unwrap() else { panic!() };
        assert_eq!(hopf, group_algebra(&GroupTable::cyclic(2), Field::Q));
        let Subject::Hopf { hopf, .. } = from_value(&z2(), Some(Field::Fp(3))).unwrap() else { panic!() };
        assert_eq!(hopf.field(), Field::Fp(3));
    }

    #[test]
    fn builder_refs() {
        let s = from_value(&json!({"builder": "group_algebra", "group": "D8"}), None).unwrap();
        assert_eq!(s.hopf().unwrap().dim(), 8);
        let s = from_value(&json!({"builder": "group_algebra", "group": [[0, 1], [1, 0]]}), None).unwrap();
        assert_eq!(s.origin().unwrap().group.order, 2);
        let s = from_value(&json!({"builder": "finite_field_ext", "p": 2, "poly": [1, 1, 1]}), None).unwrap();
        assert_eq!(s.field(), Field::Fp(2));
        assert!(from_value(&json!({"builder": "paper_example"}), Some(Field::Q)).is_err());
        assert!(from_value(&json!({"builder": "nope"}), None).is_err());
    }

    #[test]
    fn scalars_and_shapes() {
        assert_eq!(scalar(&json!("1+2*i"), Field::Qi).unwrap().to_string(), "1+2*i");
        assert_eq!(scalar(&json!(-1), Field::Fp(5)).unwrap(), Field::Fp(5).int(4));
        let mut bad = z2();
        bad["counit"] = json!([1]);
        assert!(matches!(from_value(&bad, None), Err(Error::Dimension(_))));
    }

    #[test]
    fn module_algebra_input() {
        let v = json!({
            "kind": "module_algebra",
            "algebra": {"dim": 2, "unit": [1, 0], "mult": [[[1, 0], [0, 1]], [[0, 1], [2, 0]]]},
            "hopf": {"builder": "group_algebra", "group": "Z2"},
            "action": [[[1, 0], [0, 1]], [[1, 0], [0, -1]]]
        });
        let s = from_value(&v, None).unwrap();
        assert_eq!(s.module().unwrap().dim(), 2);
    }
}
