//! Full automorphism group from a reduced group and its branch-orbit signature.
//!
//! Presentations are kept symbolic in `n` and `δ`; the numeric values travel alongside.

use super::{Family, GroupFixture, OrbitReport};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroupReport {
    pub fixture: String,
    pub reduced_group: String,
    /// `None` when the tables leave the structure open.
    pub full_group: Option<String>,
    /// Dimension of the locus: the number of generic orbits.
    pub dimension: usize,
    /// Dihedral Case A subcase (1 to 4), by which fixed points of `1/x` are branch points.
    pub case: Option<u8>,
    pub n: u64,
    pub delta: u64,
    pub caveats: Vec<String>,
}

pub const G1: &str = "⟨R,S | R^{2n}=1, S^δ=1, RSR^{-1}=S^{-1}⟩";
pub const G2: &str = "⟨R,S | R^{2n}=1, S^δ=1, (RS)^2=1⟩";
pub const G3: &str = "Z/nZ ⋊ D_δ";
const S4_H: &str = "⟨X,Y,T | Y^2=X^4=XTX^{-1}=YTY^{-1}=T, (X^{-1}Y)^3=T^k, T^n=1⟩";
const A5_H: &str = "⟨X,Y,Z,T | T^n=X^3=1, Y^2=T, Z^2=T, (XY)^3=T^ℓ, (YZ)^3=T^o, (XZ)^2=T^m, XTX^{-1}=T, ZTZ^{-1}=T, YTY^{-1}=T⟩";
const A4B_H: &str = "⟨R,S | R^2=S^2, S^{2n}=1, RSR^{-1}=S^r⟩";

/// Look up the full automorphism group of `y^n = f(x)` whose branch polynomial gave `report`.
pub fn classify(fixture: &GroupFixture, report: &OrbitReport, n: u64, delta: u64) -> Result<AutGroupReport> {
    let name = fixture.name();
    if report.fixture != name {
        return Err(Error::Inconsistent(format!("report for {} used with fixture {name}", report.fixture)));
    }
    if delta <= 1 {
        return Err(Error::Invalid("the extra automorphism needs δ > 1".into()));
    }
    if n < 2 {
        return Err(Error::Invalid("n must be at least 2".into()));
    }
    if !(fixture.extra_order as u64).is_multiple_of(delta) {
        return Err(Error::Inconsistent(format!(
            "δ = {delta} does not divide the order {} of the extra automorphism in {name}",
            fixture.extra_order
        )));
    }
    if !n.is_multiple_of(delta) {
        return Err(Error::Inconsistent(format!("δ = {delta} does not divide n = {n}")));
    }
    for o in &fixture.orbits {
        if o.forbidden() && report.count(&o.name) == 1 {
            return Err(Error::Inconsistent(format!(
                "orbit {} meets a fixed point of the extra automorphism and cannot be a branch orbit",
                o.name
            )));
        }
    }
    let t = |o: &str| report.count(o);
    let odd = n % 2 == 1;
    let mut caveats = Vec::new();
    let mut case = None;
    let full = match fixture.family {
        Family::Cyclic(_) => {
            caveats.push("no structure table for a cyclic reduced group".into());
            None
        }
        Family::DihedralA(d) => {
            // 1 lies in B^-; -1 lies in B^- for even δ and in B^+ for odd δ.
            let plus_one = t("B^-") == 1;
            let minus_one = if d % 2 == 0 { t("B^-") == 1 } else { t("B^+") == 1 };
            let c = match (plus_one, minus_one) {
                (false, false) => 1,
                (false, true) => 2,
                (true, false) => 3,
                (true, true) => 4,
            };
            case = Some(c);
            match c {
                1 => Some(G3.to_string()),
                3 => Some(G2.to_string()),
                4 => {
                    caveats.push(format!("case 4 allows G_1 = {G1} or G_2 = {G2}; the locus component decides"));
                    None
                }
                _ => {
                    caveats.push("case 2 is not assigned a group by the dihedral table".into());
                    None
                }
            }
        }
        Family::DihedralB(_) => {
            if odd {
                return Err(Error::Inconsistent("an extra involution x -> -x needs n even".into()));
            }
            if t("B_1") == 1 {
                Some("C_{nm} ⋊ C_2".into())
            } else {
                Some("C_n ⋊ D_m".into())
            }
        }
        Family::A4A => {
            if t("B_1") == 0 && t("B_2") == 0 {
                Some("Z/nZ × A_4".into())
            } else {
                Some("Z/3nZ × V_4".into())
            }
        }
        Family::A4B => {
            if t("B_1") == 0 {
                Some("Z/nZ × A_4".into())
            } else {
                caveats.push("r is a suitable solution of modular equations that are not solved here".into());
                Some(A4B_H.into())
            }
        }
        Family::S4A => Some("C_n × S_4".into()),
        Family::S4B => {
            if n % 4 == 2 && t("B_0'") == 1 && t("B_2'") == 1 {
                caveats.push("k ∈ {1,…,n} is left undetermined".into());
                Some(S4_H.into())
            } else {
                Some("Z/nZ × S_4".into())
            }
        }
        Family::S4C => Some("S_4 ⋊ Z_n".into()),
        Family::A5A => {
            if odd || t("B_0*") == 0 {
                Some("A_5 × Z/nZ".into())
            } else {
                caveats.push("n even with the size-30 orbit present: the presentation is not tabulated".into());
                None
            }
        }
        Family::A5B => Some("Z/nZ × A_5".into()),
        Family::A5C => {
            if odd || t("B_0*''") == 0 {
                Some("Z/nZ × A_5".into())
            } else {
                caveats.push("m, ℓ, o ∈ {1,…,n} are left undetermined".into());
                Some(A5_H.into())
            }
        }
        Family::ElemAbelian { .. } => Some("((Z/pZ)^t ⋊ Z/mZ) × Z/nZ".into()),
        Family::Psl { .. } | Family::Pgl { .. } => {
            if odd || t("B_0") == 1 {
                Some("Z/nZ × G".into())
            } else {
                caveats.push("n even without B_0: the structure is described by a restriction map".into());
                None
            }
        }
    };
    caveats.extend(fixture.caveats.iter().cloned());
    Ok(AutGroupReport {
        fixture: name,
        reduced_group: fixture.family.reduced_group(),
        full_group: full,
        dimension: report.generic_count,
        case,
        n,
        delta,
        caveats,
    })
}
