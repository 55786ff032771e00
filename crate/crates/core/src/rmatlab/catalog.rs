use super::RMatrix;
use crate::error::{QgwError, Result};
use crate::scalars::Scalar;

fn lam() -> Scalar {
    Scalar::q_minus_qinv()
}

fn delta(x: usize, y: usize) -> bool {
    x == y
}

/// Non-standard solution for `gl(n|m)`: diagonal `q` on the first `n` indices,
/// `−q⁻¹` on the last `m`, signs `(-1)^{p(i)p(j)}` on the mixed diagonal.
pub fn gl_nm(n: usize, m: usize) -> Result<RMatrix> {
    gl_family(n, m, false)
}

/// Its superization with the same grading.
pub fn gl_nm_super(n: usize, m: usize) -> Result<RMatrix> {
    gl_family(n, m, true)
}

fn gl_family(n: usize, m: usize, sup: bool) -> Result<RMatrix> {
    let d = n + m;
    if d == 0 {
        return Err(QgwError::Dimension("n + m must be positive".into()));
    }
    let p: Vec<u8> = (0..d).map(|i| u8::from(i >= n)).collect();
    let pp = p.clone();
    let m_ = RMatrix::from_fn("", d, move |a, c, b, dd| {
        // E_ii⊗E_jj contributes at a = c = i, b = d = j.
        if delta(a, c) && delta(b, dd) {
            let (i, j) = (a, b);
            return if i == j {
                if pp[i] == 0 {
                    Scalar::q()
                } else if sup {
                    Scalar::q_pow(-1)
                } else {
                    -Scalar::q_pow(-1)
                }
            } else if !sup && pp[i] & pp[j] == 1 {
                Scalar::from_i64(-1)
            } else {
                Scalar::one()
            };
        }
        // E_ij⊗E_ji with j > i contributes at a = i, c = j, b = j, d = i.
        if delta(a, dd) && delta(c, b) && c > a {
            return if sup && pp[a] & pp[c] == 1 { -lam() } else { lam() };
        }
        Scalar::zero()
    })?;
    let name = format!("gl({n}|{m}){}", if sup { " super" } else { "" });
    RMatrix::new(&name, d, m_.matrix().clone(), p, sup)
}

/// Standard Hecke solution of `GL_q(n)`.
pub fn gl_standard(n: usize) -> Result<RMatrix> {
    let r = gl_nm(n, 0)?;
    RMatrix::new(&format!("GL_q({n})"), n, r.matrix().clone(), vec![0; n], false)
}

pub fn alexander_conway() -> Result<RMatrix> {
    let r = gl_nm(1, 1)?;
    RMatrix::new("AC", 2, r.matrix().clone(), vec![0, 0], false)
}

fn four_by_four(name: &str, rows: [[Scalar; 4]; 4], grading: Vec<u8>, sup: bool) -> Result<RMatrix> {
    let m = crate::linalg::SMatrix::from_fn(4, 4, |r, c| rows[r][c].clone());
    RMatrix::new(name, 2, m, grading, sup)
}

/// The AC matrix with the sign of its last diagonal entry flipped.
pub fn alexander_conway_super() -> Result<RMatrix> {
    let (q, qi, o, z) = (Scalar::q(), Scalar::q_pow(-1), Scalar::one(), Scalar::zero());
    four_by_four(
        "AC super",
        [
            [q, z.clone(), z.clone(), z.clone()],
            [z.clone(), o.clone(), lam(), z.clone()],
            [z.clone(), z.clone(), o, z.clone()],
            [z.clone(), z.clone(), z, qi],
        ],
        vec![0, 1],
        true,
    )
}

pub fn r_omega() -> Result<RMatrix> {
    let (q, qi, z) = (Scalar::q(), Scalar::q_pow(-1), Scalar::zero());
    four_by_four(
        "R_Omega",
        [
            [q.clone(), z.clone(), z.clone(), z.clone()],
            [z.clone(), q, lam(), z.clone()],
            [z.clone(), z.clone(), qi.clone(), z.clone()],
            [z.clone(), z.clone(), z, -qi],
        ],
        vec![0, 0],
        false,
    )
}

pub fn r_omega_super() -> Result<RMatrix> {
    let r = r_omega()?.superize(&[0, 1])?;
    Ok(RMatrix { name: "R_Omega super".into(), ..r })
}

pub fn identity(n: usize) -> Result<RMatrix> {
    RMatrix::from_fn(&format!("identity({n})"), n, |a, c, b, d| {
        if a == c && b == d {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// The `1×1` Hecke solution `(q)`.
pub fn one_dim() -> Result<RMatrix> {
    RMatrix::from_fn("(q)", 1, |_, _, _, _| Scalar::q())
}

pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "ac", "ac-super", "omega", "omega-super", "gl2", "gl3", "gl(n|m)", "gl(n|m)-super", "identityN", "q1",
    ]
}

/// Looks up a catalog matrix; `gl(n|m)`, `glN` and `identityN` take their sizes from the name.
pub fn by_name(name: &str) -> Result<RMatrix> {
    let unknown = || QgwError::UnknownName(name.to_string());
    match name {
        "ac" => return alexander_conway(),
        "ac-super" => return alexander_conway_super(),
        "omega" => return r_omega(),
        "omega-super" => return r_omega_super(),
        "q1" => return one_dim(),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("gl(") {
        let (body, sup) = match rest.strip_suffix(")-super") {
            Some(b) => (b, true),
            None => (rest.strip_suffix(')').ok_or_else(unknown)?, false),
        };
        let (n, m) = body.split_once('|').ok_or_else(unknown)?;
        let n: usize = n.parse().map_err(|_| unknown())?;
        let m: usize = m.parse().map_err(|_| unknown())?;
        return if sup { gl_nm_super(n, m) } else { gl_nm(n, m) };
    }
    if let Some(k) = name.strip_prefix("gl") {
        return gl_standard(k.parse().map_err(|_| unknown())?);
    }
    if let Some(k) = name.strip_prefix("identity") {
        return identity(k.parse().map_err(|_| unknown())?);
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_entries() {
        let ac = alexander_conway().unwrap();
        assert_eq!(ac.matrix().get(1, 2), &lam());
        assert_eq!(ac.matrix().get(3, 3), &-Scalar::q_pow(-1));
        assert_eq!(ac.matrix().get(1, 1), &Scalar::one());
        assert_eq!(r_omega().unwrap().matrix().get(3, 3), &-Scalar::q_pow(-1));
        assert_eq!(gl_nm(1, 1).unwrap().matrix(), ac.matrix());
        assert_eq!(gl_nm_super(1, 1).unwrap().matrix(), alexander_conway_super().unwrap().matrix());
    }

    #[test]
    fn family_superization() {
        for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)] {
            let r = gl_nm(n, m).unwrap();
            let s = r.superize(r.grading()).unwrap();
            assert_eq!(s.matrix(), gl_nm_super(n, m).unwrap().matrix(), "gl({n}|{m})");
        }
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(by_name("nope"), Err(QgwError::UnknownName(_))));
        assert!(matches!(by_name("gl(a|1)"), Err(QgwError::UnknownName(_))));
        assert!(by_name("gl(0|0)").is_err());
    }
}
