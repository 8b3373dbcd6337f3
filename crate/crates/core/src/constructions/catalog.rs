use crate::design::{complement, is_flag_transitive, orbit_design, verify_symmetric, DesignParams, IncidenceStructure};
use crate::perm::PermutationGroup;

use super::data::vendored_group;
use super::{develop_difference_set, find_difference_set, AmbientGroup, ConstructionError};

pub const CATALOG_NAMES: [&str; 8] = [
    "fano_complement",
    "paley_11_5_2",
    "paley_complement_11_6_3",
    "unitary_45_12_3",
    "imprimitive_45_12_3",
    "biplane16_ea",
    "biplane16_z2z8",
    "biplane16_q8z2",
];

pub const UNITARY_BASE_BLOCK: [usize; 12] = [1, 2, 4, 5, 12, 15, 17, 21, 28, 34, 35, 38];
pub const IMPRIMITIVE_BASE_BLOCK: [usize; 12] = [1, 2, 3, 4, 6, 11, 19, 28, 36, 40, 41, 45];
pub const IMPRIMITIVE_BLOCK: [usize; 9] = [1, 6, 11, 17, 20, 23, 26, 29, 32];
pub const PALEY_BASE_BLOCK: [usize; 5] = [1, 2, 3, 5, 11];

/// A named design, the group that acts on it (when one is shipped), and the
/// properties claimed for it.
///
/// When `group` is `None` the flags describe the design's full automorphism
/// group, which is not computed here.
#[derive(Clone, Debug)]
pub struct NamedInstance {
    pub name: &'static str,
    pub description: &'static str,
    pub design: IncidenceStructure,
    pub expected: DesignParams,
    pub group: Option<PermutationGroup>,
    pub group_label: &'static str,
    pub flag_transitive: Option<bool>,
    pub point_primitive: Option<bool>,
}

/// What was observed when checking an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceCheck {
    pub params: DesignParams,
    pub flag_transitive: Option<bool>,
    /// `Some(None)` when primitive, `Some(Some((c, d)))` for a system of `d`
    /// classes of size `c`; `None` when no group is shipped.
    pub imprimitivity: Option<Option<(usize, usize)>>,
}

impl InstanceCheck {
    pub fn point_primitive(&self) -> Option<bool> {
        self.imprimitivity.map(|w| w.is_none())
    }
}

impl NamedInstance {
    /// Re-verifies the design and, when a group is shipped, its action.
    pub fn check(&self) -> Result<InstanceCheck, ConstructionError> {
        let params = verify_symmetric(&self.design)?;
        let (flag_transitive, imprimitivity) = match &self.group {
            None => (None, None),
            Some(g) => {
                let ft = is_flag_transitive(g, &self.design)?;
                let witness = g
                    .imprimitivity_witness()?
                    .map(|s| (s.class_size(), s.num_classes()));
                (Some(ft), Some(witness))
            }
        };
        Ok(InstanceCheck {
            params,
            flag_transitive,
            imprimitivity,
        })
    }

    /// Whether a check agrees with the expected parameters and flags.
    pub fn agrees_with(&self, check: &InstanceCheck) -> bool {
        check.params == self.expected
            && (self.group.is_none()
                || (check.flag_transitive == self.flag_transitive
                    && check.point_primitive() == self.point_primitive))
    }
}

fn zero_based(labels: &[usize]) -> Vec<usize> {
    labels.iter().map(|l| l - 1).collect()
}

fn params(v: usize, k: usize, lambda: usize) -> DesignParams {
    DesignParams::new(v, k, lambda).expect("catalog parameters satisfy k(k-1) = λ(v-1)")
}

/// Complement of the Fano plane with lines `{1,2,4} + i (mod 7)`, label 7 for 0.
pub fn fano_complement_design() -> IncidenceStructure {
    let index = |r: usize| (r + 6) % 7;
    let lines: Vec<Vec<usize>> = (0..7)
        .map(|i| [1, 2, 4].iter().map(|d| index((d + i) % 7)).collect())
        .collect();
    let fano = IncidenceStructure::new(7, lines).expect("valid blocks");
    complement(&fano).expect("the Fano plane is symmetric")
}

fn biplane(name: &'static str, description: &'static str, ambient: AmbientGroup, ft: Option<bool>, prim: Option<bool>) -> Result<NamedInstance, ConstructionError> {
    let spec = find_difference_set(&ambient, 6, 2)?
        .ok_or_else(|| ConstructionError::UnknownName(format!("no (16,6,2) difference set in {ambient}")))?;
    let (design, _) = develop_difference_set(&spec)?;
    Ok(NamedInstance {
        name,
        description,
        design,
        expected: params(16, 6, 2),
        group: None,
        group_label: "",
        flag_transitive: ft,
        point_primitive: prim,
    })
}

pub fn catalog(name: &str) -> Result<NamedInstance, ConstructionError> {
    let inst = match name {
        "fano_complement" => NamedInstance {
            name: "fano_complement",
            description: "complement of the Fano plane",
            design: fano_complement_design(),
            expected: params(7, 4, 2),
            group: Some(vendored_group("psl2_7")?),
            group_label: "PSL(2,7)",
            flag_transitive: Some(true),
            point_primitive: Some(true),
        },
        "paley_11_5_2" => {
            let g = vendored_group("psl2_11")?;
            NamedInstance {
                name: "paley_11_5_2",
                description: "Paley biplane, base block {1,2,3,5,11}",
                design: orbit_design(&g, &zero_based(&PALEY_BASE_BLOCK))?,
                expected: params(11, 5, 2),
                group: Some(g),
                group_label: "PSL(2,11)",
                flag_transitive: Some(true),
                point_primitive: Some(true),
            }
        }
        "paley_complement_11_6_3" => {
            let paley = catalog("paley_11_5_2")?;
            NamedInstance {
                name: "paley_complement_11_6_3",
                description: "complement of the Paley biplane",
                design: complement(&paley.design)?,
                expected: params(11, 6, 3),
                group: paley.group,
                group_label: "PSL(2,11)",
                flag_transitive: Some(true),
                point_primitive: Some(true),
            }
        }
        "unitary_45_12_3" => {
            let g = vendored_group("psu4_2_45")?;
            NamedInstance {
                name: "unitary_45_12_3",
                description: "unitary (45,12,3) design",
                design: orbit_design(&g, &zero_based(&UNITARY_BASE_BLOCK))?,
                expected: params(45, 12, 3),
                group: Some(g),
                group_label: "PSU(4,2)",
                flag_transitive: Some(true),
                point_primitive: Some(true),
            }
        }
        "imprimitive_45_12_3" => {
            let g = vendored_group("sigma45")?;
            NamedInstance {
                name: "imprimitive_45_12_3",
                description: "point-imprimitive (45,12,3) design from sigma1..sigma5",
                design: orbit_design(&g, &zero_based(&IMPRIMITIVE_BASE_BLOCK))?,
                expected: params(45, 12, 3),
                group: Some(g),
                group_label: "3^4:(5:8)",
                flag_transitive: Some(true),
                point_primitive: Some(false),
            }
        }
        "biplane16_ea" => biplane(
            "biplane16_ea",
            "(16,6,2) from a difference set in Z2^4",
            AmbientGroup::elementary_abelian(2, 4)?,
            Some(true),
            Some(false),
        )?,
        "biplane16_z2z8" => biplane(
            "biplane16_z2z8",
            "(16,6,2) from a difference set in Z2xZ8",
            AmbientGroup::product(&[2, 8])?,
            Some(true),
            Some(false),
        )?,
        "biplane16_q8z2" => biplane(
            "biplane16_q8z2",
            "(16,6,2) from a difference set in Q8xZ2",
            AmbientGroup::q8_times_z2(),
            Some(false),
            None,
        )?,
        other => return Err(ConstructionError::UnknownName(other.to_string())),
    };
    Ok(inst)
}
