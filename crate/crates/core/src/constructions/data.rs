//! Group generators and the elimination catalog shipped with the crate,
//! checked against `SHA256SUMS`.

use sha2::{Digest, Sha256};

use crate::perm::PermutationGroup;

use super::ConstructionError;

pub const SIGMA45: &str = include_str!("../../../../data/sigma45.grp");
pub const PSU4_2_45: &str = include_str!("../../../../data/psu4_2_45.grp");
pub const PSL2_7: &str = include_str!("../../../../data/psl2_7.grp");
pub const PSL2_11: &str = include_str!("../../../../data/psl2_11.grp");
pub const CATALOG: &str = include_str!("../../../../data/catalog.txt");
const SHA256SUMS: &str = include_str!("../../../../data/SHA256SUMS");

pub const FILES: [(&str, &str); 5] = [
    ("catalog.txt", CATALOG),
    ("psl2_11.grp", PSL2_11),
    ("psl2_7.grp", PSL2_7),
    ("psu4_2_45.grp", PSU4_2_45),
    ("sigma45.grp", SIGMA45),
];

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Compares every embedded file with its recorded digest.
pub fn verify_checksums() -> Result<(), ConstructionError> {
    for (name, text) in FILES {
        let recorded = SHA256SUMS
            .lines()
            .filter_map(|l| l.split_once(char::is_whitespace))
            .find(|(_, file)| file.trim() == name)
            .map(|(digest, _)| digest.trim())
            .ok_or_else(|| ConstructionError::Checksum {
                file: name.to_string(),
                detail: "no recorded digest".into(),
            })?;
        let actual = sha256_hex(text);
        if actual != recorded {
            return Err(ConstructionError::Checksum {
                file: name.to_string(),
                detail: format!("expected {recorded}, found {actual}"),
            });
        }
    }
    Ok(())
}

/// Parses an embedded group file after checking its digest.
pub fn vendored_group(name: &str) -> Result<PermutationGroup, ConstructionError> {
    verify_checksums()?;
    let text = FILES
        .iter()
        .filter(|(file, _)| file.ends_with(".grp"))
        .find(|(file, _)| file.trim_end_matches(".grp") == name || *file == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| ConstructionError::UnknownName(name.to_string()))?;
    Ok(PermutationGroup::from_group_file(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksums_match() {
        verify_checksums().unwrap();
    }

    #[test]
    fn groups_parse() {
        for name in ["sigma45", "psu4_2_45", "psl2_7", "psl2_11"] {
            vendored_group(name).unwrap();
        }
        assert!(vendored_group("nope").is_err());
    }
}
