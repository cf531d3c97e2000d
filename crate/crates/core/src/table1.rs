//! Root pairing sums `S(alpha^vee, Ad)` with Coxeter numbers, recomputed
//! from scratch and compared against the closed formulas per family.

use crate::error::Result;
use crate::griffiths::weight_pairing_sum_int;
use crate::par::{self, Execution};
use crate::repweights::adjoint_weight_system;
use crate::rootdata::{Family, RootSystem, RootSystemSpec};
use std::sync::Arc;

/// One family row as printed: symbolic formulas in the family parameter `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFormulas {
    pub family: Family,
    pub label: &'static str,
    pub coxeter: &'static str,
    pub gamma: &'static str,
    pub s_simply_laced: &'static str,
    pub s_short_coroot: &'static str,
    pub s_long_coroot: &'static str,
    /// Ranks at which the row is instantiated and checked.
    pub ranks: &'static [usize],
}

pub const FAMILIES: [FamilyFormulas; 9] = [
    FamilyFormulas {
        family: Family::A,
        label: "A_{n-1}",
        coxeter: "n",
        gamma: "n^2",
        s_simply_laced: "4n",
        s_short_coroot: "",
        s_long_coroot: "",
        ranks: &[1, 2, 3, 4, 5, 6, 7],
    },
    FamilyFormulas {
        family: Family::B,
        label: "B_n",
        coxeter: "2n",
        gamma: "(n+1)(4n-2)",
        s_simply_laced: "",
        s_short_coroot: "4(2n-1)",
        s_long_coroot: "8(2n-1)",
        ranks: &[2, 3, 4],
    },
    FamilyFormulas {
        family: Family::C,
        label: "C_n",
        coxeter: "2n",
        gamma: "(n+1)(4n-2)",
        s_simply_laced: "",
        s_short_coroot: "4(n+1)",
        s_long_coroot: "8(n+1)",
        ranks: &[2, 3, 4],
    },
    FamilyFormulas {
        family: Family::D,
        label: "D_n",
        coxeter: "2(n-1)",
        gamma: "4(n-1)^2",
        s_simply_laced: "8(n-1)",
        s_short_coroot: "",
        s_long_coroot: "",
        ranks: &[4],
    },
    FamilyFormulas {
        family: Family::G,
        label: "G_2",
        coxeter: "6",
        gamma: "48",
        s_simply_laced: "",
        s_short_coroot: "16",
        s_long_coroot: "48",
        ranks: &[2],
    },
    FamilyFormulas {
        family: Family::F,
        label: "F_4",
        coxeter: "12",
        gamma: "162",
        s_simply_laced: "",
        s_short_coroot: "36",
        s_long_coroot: "72",
        ranks: &[4],
    },
    FamilyFormulas {
        family: Family::E,
        label: "E_6",
        coxeter: "12",
        gamma: "144",
        s_simply_laced: "48",
        s_short_coroot: "",
        s_long_coroot: "",
        ranks: &[6],
    },
    FamilyFormulas {
        family: Family::E,
        label: "E_7",
        coxeter: "18",
        gamma: "324",
        s_simply_laced: "72",
        s_short_coroot: "",
        s_long_coroot: "",
        ranks: &[7],
    },
    FamilyFormulas {
        family: Family::E,
        label: "E_8",
        coxeter: "30",
        gamma: "900",
        s_simply_laced: "120",
        s_short_coroot: "",
        s_long_coroot: "",
        ranks: &[8],
    },
];

/// Table values at one instantiated rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowValues {
    pub coxeter: i64,
    /// Stored constant; not recomputed.
    pub gamma: i64,
    pub s_simply_laced: Option<i64>,
    pub s_short_coroot: Option<i64>,
    pub s_long_coroot: Option<i64>,
}

/// Formula values for `spec`.
pub fn expected(spec: RootSystemSpec) -> RowValues {
    let r = spec.rank() as i64;
    let (coxeter, gamma, sl, short, long) = match (spec.family(), r) {
        (Family::A, _) => {
            let n = r + 1;
            (n, n * n, Some(4 * n), None, None)
        }
        (Family::B, n) => (
            2 * n,
            (n + 1) * (4 * n - 2),
            None,
            Some(4 * (2 * n - 1)),
            Some(8 * (2 * n - 1)),
        ),
        (Family::C, n) => (
            2 * n,
            (n + 1) * (4 * n - 2),
            None,
            Some(4 * (n + 1)),
            Some(8 * (n + 1)),
        ),
        (Family::D, n) => (
            2 * (n - 1),
            4 * (n - 1) * (n - 1),
            Some(8 * (n - 1)),
            None,
            None,
        ),
        (Family::G, _) => (6, 48, None, Some(16), Some(48)),
        (Family::F, _) => (12, 162, None, Some(36), Some(72)),
        (Family::E, 6) => (12, 144, Some(48), None, None),
        (Family::E, 7) => (18, 324, Some(72), None, None),
        (Family::E, _) => (30, 900, Some(120), None, None),
    };
    RowValues {
        coxeter,
        gamma,
        s_simply_laced: sl,
        s_short_coroot: short,
        s_long_coroot: long,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub spec: RootSystemSpec,
    pub computed: RowValues,
    pub expected: RowValues,
    /// Names of cells where computed and expected differ.
    pub mismatches: Vec<String>,
}

impl Instance {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `S(alpha^vee, Ad)` for every root of `rs`, checked constant per length.
///
/// Short coroots belong to long roots and vice versa.
pub fn compute(spec: RootSystemSpec) -> Result<Instance> {
    let rs = Arc::new(RootSystem::new(spec)?);
    let ad = adjoint_weight_system(&rs);
    let mut mismatches = Vec::new();
    let long = rs.long_norm2();
    let mut short_coroot: Option<i64> = None;
    let mut long_coroot: Option<i64> = None;
    for root in rs.roots() {
        let s = weight_pairing_sum_int(&ad, root) as i64;
        // long root <-> short coroot
        let slot = if root.norm2() == long {
            &mut short_coroot
        } else {
            &mut long_coroot
        };
        match slot {
            None => *slot = Some(s),
            Some(prev) if *prev != s => {
                mismatches.push(format!("S not constant on roots of norm {}", root.norm2()));
            }
            _ => {}
        }
    }
    let computed = if rs.is_simply_laced() {
        RowValues {
            coxeter: rs.coxeter_number() as i64,
            gamma: expected(spec).gamma,
            s_simply_laced: short_coroot,
            s_short_coroot: None,
            s_long_coroot: None,
        }
    } else {
        RowValues {
            coxeter: rs.coxeter_number() as i64,
            gamma: expected(spec).gamma,
            s_simply_laced: None,
            s_short_coroot: short_coroot,
            s_long_coroot: long_coroot,
        }
    };
    let exp = expected(spec);
    if computed.coxeter != exp.coxeter {
        mismatches.push(format!(
            "{spec} h: computed {} expected {}",
            computed.coxeter, exp.coxeter
        ));
    }
    for (name, c, e) in [
        (
            "S simply-laced",
            computed.s_simply_laced,
            exp.s_simply_laced,
        ),
        (
            "S short coroot",
            computed.s_short_coroot,
            exp.s_short_coroot,
        ),
        ("S long coroot", computed.s_long_coroot, exp.s_long_coroot),
    ] {
        if c != e {
            mismatches.push(format!("{spec} {name}: computed {c:?} expected {e:?}"));
        }
    }
    if rs.is_simply_laced() && exp.gamma != exp.coxeter * exp.coxeter {
        mismatches.push(format!(
            "{spec} gamma: h^2 = {} but stored {}",
            exp.coxeter * exp.coxeter,
            exp.gamma
        ));
    }
    Ok(Instance {
        spec,
        computed,
        expected: exp,
        mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyResult {
    pub formulas: FamilyFormulas,
    pub instances: Vec<Instance>,
}

impl FamilyResult {
    pub fn ok(&self) -> bool {
        self.instances.iter().all(Instance::ok)
    }
}

pub fn reproduce(exec: Execution) -> Result<Vec<FamilyResult>> {
    let jobs: Vec<(usize, RootSystemSpec)> = FAMILIES
        .iter()
        .enumerate()
        .flat_map(|(i, f)| {
            f.ranks
                .iter()
                .map(move |&r| (i, RootSystemSpec::new(f.family, r).expect("legal rank")))
        })
        .collect();
    let computed = par::map(exec, &jobs, |&(_, spec)| compute(spec));
    let mut out: Vec<FamilyResult> = FAMILIES
        .iter()
        .map(|f| FamilyResult {
            formulas: f.clone(),
            instances: Vec::new(),
        })
        .collect();
    for ((i, _), inst) in jobs.into_iter().zip(computed) {
        out[i].instances.push(inst?);
    }
    Ok(out)
}
