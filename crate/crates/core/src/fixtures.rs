//! Printed reference data shipped with the crate under `fixtures/`.

use serde::Deserialize;

use crate::alpha_beta::Side;
use crate::error::{Error, Result};
use crate::format::matrix_from_json;
use crate::matrix::TriMatrix;
use crate::poly::Poly;
use crate::rational::{int, parse_rational, Rational};
use crate::riordan::{build_riordan, RiordanPair};
use crate::{bcomp, pseudo};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixFixture {
    Rna,
    RGeom,
    Narayana,
    ROnePlusX,
    RCatalan,
    ROneTwo,
    Example6,
    CMatrix,
    SMatrix,
}

impl MatrixFixture {
    pub const ALL: [MatrixFixture; 9] = [
        MatrixFixture::Rna,
        MatrixFixture::RGeom,
        MatrixFixture::Narayana,
        MatrixFixture::ROnePlusX,
        MatrixFixture::RCatalan,
        MatrixFixture::ROneTwo,
        MatrixFixture::Example6,
        MatrixFixture::CMatrix,
        MatrixFixture::SMatrix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatrixFixture::Rna => "rna",
            MatrixFixture::RGeom => "r_geom",
            MatrixFixture::Narayana => "narayana",
            MatrixFixture::ROnePlusX => "r_one_plus_x",
            MatrixFixture::RCatalan => "r_catalan",
            MatrixFixture::ROneTwo => "r_one_two",
            MatrixFixture::Example6 => "example6",
            MatrixFixture::CMatrix => "c_matrix",
            MatrixFixture::SMatrix => "s_matrix",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn json(self) -> &'static str {
        match self {
            MatrixFixture::Rna => include_str!("../fixtures/rna.json"),
            MatrixFixture::RGeom => include_str!("../fixtures/r_geom.json"),
            MatrixFixture::Narayana => include_str!("../fixtures/narayana.json"),
            MatrixFixture::ROnePlusX => include_str!("../fixtures/r_one_plus_x.json"),
            MatrixFixture::RCatalan => include_str!("../fixtures/r_catalan.json"),
            MatrixFixture::ROneTwo => include_str!("../fixtures/r_one_two.json"),
            MatrixFixture::Example6 => include_str!("../fixtures/example6.json"),
            MatrixFixture::CMatrix => include_str!("../fixtures/c_matrix.json"),
            MatrixFixture::SMatrix => include_str!("../fixtures/s_matrix.json"),
        }
    }

    pub fn load(self) -> TriMatrix<Rational> {
        matrix_from_json(self.json()).expect("shipped fixture parses")
    }

    /// The same matrix computed from its definition, `size` rows.
    pub fn compute(self, size: usize) -> Result<TriMatrix<Rational>> {
        let order = size.saturating_sub(1);
        Ok(match self {
            MatrixFixture::Rna => {
                let r = bcomp::rna_series(&int(1), order)?;
                build_riordan(&RiordanPair::new(r.clone(), r)?, order)?
            }
            MatrixFixture::RGeom => bcomp::u_matrix(&bcomp::rna_bfun(order), order),
            MatrixFixture::Narayana => bcomp::narayana_matrix(order),
            MatrixFixture::ROnePlusX => bcomp::u_matrix(&bcomp::one_plus_x_bfun(order), order),
            MatrixFixture::RCatalan => bcomp::u_matrix(&bcomp::catalan_bfun(order), order),
            MatrixFixture::ROneTwo => bcomp::f_matrix(order),
            MatrixFixture::Example6 => pseudo::example6_triangle(order),
            MatrixFixture::CMatrix => pseudo::c_matrix(order),
            MatrixFixture::SMatrix => pseudo::s_matrix(order),
        })
    }
}

#[derive(Deserialize)]
struct Monomial {
    coeff: i64,
    b: Vec<usize>,
}

#[derive(Deserialize)]
struct BTerm {
    n: usize,
    monomials: Vec<Monomial>,
}

#[derive(Deserialize)]
struct BNote {
    n: usize,
    printed_leading: Monomial,
}

#[derive(Deserialize)]
struct BList {
    terms: Vec<BTerm>,
    notes: Vec<BNote>,
}

/// One monomial `c ∏ b_i^{e_i}`; `exponents[i]` belongs to `b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BMonomial {
    pub coeff: i64,
    pub exponents: Vec<usize>,
}

fn bmono(m: Monomial) -> BMonomial {
    let mut exponents = m.b;
    while exponents.last() == Some(&0) {
        exponents.pop();
    }
    BMonomial { coeff: m.coeff, exponents }
}

fn b_list() -> BList {
    serde_json::from_str(include_str!("../fixtures/b1_list.json")).expect("shipped fixture parses")
}

/// `g_0 ... g_9` in terms of `b_0, b_1, ...` as stored.
pub fn b1_list() -> Vec<(usize, Vec<BMonomial>)> {
    b_list().terms.into_iter().map(|t| (t.n, t.monomials.into_iter().map(bmono).collect())).collect()
}

/// Entries whose printed leading monomial differs from the stored one.
pub fn b1_printed_leading() -> Vec<(usize, BMonomial)> {
    b_list().notes.into_iter().map(|n| (n.n, bmono(n.printed_leading))).collect()
}

#[derive(Deserialize)]
struct ZTerm {
    parts: Vec<usize>,
    z: Vec<String>,
}

#[derive(Deserialize)]
struct ZEntry {
    n: usize,
    terms: Vec<ZTerm>,
}

#[derive(Deserialize)]
struct TTerm {
    parts: Vec<usize>,
    coeff: String,
    printed: Option<String>,
}

#[derive(Deserialize)]
struct TEntry {
    n: usize,
    terms: Vec<TTerm>,
}

#[derive(Deserialize)]
struct Sided<T> {
    alpha: Vec<T>,
    beta: Vec<T>,
}

#[derive(Deserialize)]
struct SPolys {
    z_polynomials: Sided<ZEntry>,
    t_lines: Sided<TEntry>,
}

fn s_polys() -> SPolys {
    serde_json::from_str(include_str!("../fixtures/s_polys.json")).expect("shipped fixture parses")
}

fn rational(s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| Error::Malformed(e.to_string()))
}

/// A term keyed by the sorted multiset of indices.
pub type SFixtureTerm = (Vec<usize>, Poly<Rational>);

/// `s_1 ... s_4` in `z`.
pub fn s_z_polynomials(side: Side) -> Vec<(usize, Vec<SFixtureTerm>)> {
    let all = s_polys().z_polynomials;
    let entries = match side {
        Side::Alpha => all.alpha,
        Side::Beta => all.beta,
    };
    entries
        .into_iter()
        .map(|e| {
            let terms = e
                .terms
                .into_iter()
                .map(|t| {
                    let z = t.z.iter().map(|c| rational(c)).collect::<Result<Vec<_>>>().expect("fixture");
                    (t.parts, Poly::new(z))
                })
                .collect();
            (e.n, terms)
        })
        .collect()
}

/// One term of an `s_n(t c_i, 1)` line; `printed` is set where the printed
/// value differs from the stored one.
#[derive(Clone, Debug)]
pub struct TLineTerm {
    pub parts: Vec<usize>,
    pub coeff: Rational,
    pub printed: Option<String>,
}

/// `s_1(t c_i, 1) ... s_5(t c_i, 1)`.
pub fn s_t_lines(side: Side) -> Vec<(usize, Vec<TLineTerm>)> {
    let all = s_polys().t_lines;
    let entries = match side {
        Side::Alpha => all.alpha,
        Side::Beta => all.beta,
    };
    entries
        .into_iter()
        .map(|e| {
            let terms = e
                .terms
                .into_iter()
                .map(|t| TLineTerm { parts: t.parts, coeff: rational(&t.coeff).expect("fixture"), printed: t.printed })
                .collect();
            (e.n, terms)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_loads() {
        let sizes: Vec<usize> = MatrixFixture::ALL.iter().map(|f| f.load().size()).collect();
        assert_eq!(sizes, vec![7, 11, 7, 11, 11, 8, 4, 6, 6]);
        assert_eq!(b1_list().len(), 10);
        assert_eq!(s_z_polynomials(Side::Beta).len(), 4);
        assert_eq!(s_t_lines(Side::Alpha).len(), 5);
    }

    #[test]
    fn fixtures_match_definitions() {
        for f in MatrixFixture::ALL {
            let printed = f.load();
            assert_eq!(f.compute(printed.size()).unwrap(), printed, "{}", f.name());
        }
    }
}
