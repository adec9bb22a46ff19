//! JSON encodings. Rationals are strings (`"17/4"`), integer matrices are
//! row-major arrays of integers, tagged with their basis where one applies.

use serde_json::{json, Value};

use crate::family::{CriticalPoint, CriticalValue, KappaParams, Line, PointCoords, SphereCharacter, TorusCharacter};
use crate::group::{Decomposition, GroupWord, PglCharacters, PglClass, Perm, SignedPerm};
use crate::homology::IntersectionForm;
use crate::{AbelianGroup, IntMatrix, Map3, Rational};

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn rationals(qs: &[Rational]) -> Value {
    Value::Array(qs.iter().map(rational).collect())
}

pub fn params(p: &KappaParams) -> Value {
    rationals(&p.as_array())
}

fn integer(n: &crate::Integer) -> Value {
    // integers beyond i64 fall back to decimal strings
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => Value::String(n.to_string()),
    }
}

pub fn int_rows(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(integer).collect())).collect())
}

pub fn int_matrix(m: &IntMatrix, basis: Option<&str>) -> Value {
    let mut v = json!({ "rows": int_rows(m) });
    if let Some(b) = basis {
        v["basis"] = json!(b);
    }
    v
}

pub fn form(f: &IntersectionForm) -> Value {
    int_matrix(&f.matrix, Some(f.basis.tag()))
}

pub fn abelian_group(g: &AbelianGroup) -> Value {
    json!({
        "free_rank": g.free_rank,
        "torsion": g.torsion.iter().map(integer).collect::<Vec<_>>(),
        "display": g.to_string(),
    })
}

pub fn poly_map(f: &Map3) -> Value {
    Value::Array(f.components().iter().map(|c| json!(c.to_string())).collect())
}

pub fn perm(p: &Perm) -> Value {
    json!({ "cycles": p.to_string(), "images": p.images().iter().map(|i| i + 1).collect::<Vec<_>>() })
}

pub fn signed_perm(l: &SignedPerm) -> Value {
    json!(l.to_string())
}

pub fn word(w: &GroupWord) -> Value {
    json!({
        "letters": w.letters.iter().map(|g| g.letter()).collect::<Vec<_>>(),
        "tail": w.tail.as_ref().map(signed_perm).unwrap_or(Value::Null),
        "text": w.to_string(),
    })
}

pub fn decomposition(d: &Decomposition) -> Value {
    json!({
        "word": d.word.letters.iter().map(|g| g.letter()).collect::<Vec<_>>(),
        "tail": d.tail().to_string(),
        "degrees": d.degrees,
    })
}

pub fn pgl(m: &PglClass, c: &PglCharacters) -> Value {
    let rows: Vec<Value> = m.entries().iter().map(|r| Value::Array(r.iter().map(integer).collect())).collect();
    json!({
        "matrix": rows,
        "det": c.det,
        "mod2": perm(&c.mod2),
        "congruence_member": c.congruence_member,
    })
}

pub fn critical_value(v: &CriticalValue) -> Value {
    match v {
        CriticalValue::Rational(q) => json!({ "kind": "rational", "value": rational(q) }),
        CriticalValue::Algebraic(g) => json!({ "kind": "algebraic", "minpoly": g.to_string_in("v") }),
    }
}

pub fn critical_point(p: &CriticalPoint) -> Value {
    let coords = match &p.coords {
        PointCoords::Rational(c) => json!({ "kind": "rational", "point": rationals(c) }),
        PointCoords::Algebraic { minpoly, coords } => json!({
            "kind": "algebraic",
            "minpoly": minpoly.to_string_in("s"),
            "point": coords.iter().map(|c| c.to_string_in("s")).collect::<Vec<_>>(),
        }),
    };
    json!({
        "coords": coords,
        "count": p.count(),
        "multiplicity": p.multiplicity,
        "nondegenerate": p.nondegenerate,
        "value": critical_value(&p.value),
    })
}

pub fn line(l: &Line) -> Value {
    json!({
        "name": l.name(),
        "axis": l.axis.name(),
        "plane": l.plane,
        "base": l.base.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        "direction": l.direction.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
    })
}

pub fn torus(c: &TorusCharacter) -> Value {
    json!({
        "point": rationals(&c.point),
        "commutator_trace": rational(&c.commutator_trace),
        "kappa": rational(&c.kappa),
    })
}

pub fn sphere(c: &SphereCharacter) -> Value {
    json!({
        "traces": rationals(&c.traces),
        "point": rationals(&c.point),
        "params": params(&c.params),
        "s": rational(&c.s),
        "kappa": rational(&c.kappa),
        "on_surface": c.on_surface,
    })
}
