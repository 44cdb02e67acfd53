use std::fmt;
use std::path::PathBuf;

use isotopy_core::group::{alternating, cyclic, dihedral, load_cayley_file, quaternion, symmetric};
use isotopy_core::{Bounds, FiniteGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Quaternion,
}

impl Family {
    fn max_param(self) -> usize {
        match self {
            Family::Cyclic => 64,
            Family::Dihedral => 12,
            Family::Symmetric | Family::Alternating => 5,
            Family::Quaternion => 8,
        }
    }
}

/// Which group to run on: a built-in family member or a Cayley table file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Builtin { family: Family, param: usize },
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    /// Byte offset into the spec text.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid group spec at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for SpecError {}

/// Parses `family:parameter` (`cyc:6`, `dih:4`, `sym:3`, `alt:5`, `quat:8`)
/// or `@path/to/table.cayley`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let err = |position, message: String| SpecError { position, message };
    if let Some(path) = text.strip_prefix('@') {
        if path.is_empty() {
            return Err(err(1, "missing file path after '@'".into()));
        }
        return Ok(GroupSpec::File(PathBuf::from(path)));
    }
    let Some((name, param)) = text.split_once(':') else {
        return Err(err(text.len(), "expected family:parameter or @file".into()));
    };
    let family = match name {
        "cyc" | "cyclic" => Family::Cyclic,
        "dih" | "dihedral" => Family::Dihedral,
        "sym" | "symmetric" => Family::Symmetric,
        "alt" | "alternating" => Family::Alternating,
        "quat" | "quaternion" => Family::Quaternion,
        _ => return Err(err(0, format!("unknown group family {name:?}"))),
    };
    let at = name.len() + 1;
    let param: usize = param
        .parse()
        .map_err(|_| err(at, format!("parameter {param:?} is not a positive integer")))?;
    let supported = match family {
        Family::Quaternion => param == 8,
        _ => (1..=family.max_param()).contains(&param),
    };
    if !supported {
        let range = match family {
            Family::Quaternion => "only quat:8 is supported".to_string(),
            _ => format!("supported range is 1..={}", family.max_param()),
        };
        return Err(err(at, format!("unsupported parameter {param} for {name}; {range}")));
    }
    Ok(GroupSpec::Builtin { family, param })
}

impl GroupSpec {
    pub fn build(&self, bounds: &Bounds) -> isotopy_core::Result<FiniteGroup> {
        match self {
            GroupSpec::Builtin { family, param } => match family {
                Family::Cyclic => cyclic(*param),
                Family::Dihedral => dihedral(*param),
                Family::Symmetric => symmetric(*param),
                Family::Alternating => alternating(*param),
                Family::Quaternion => quaternion(),
            },
            GroupSpec::File(path) => load_cayley_file(path, bounds),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        let b = Bounds::default();
        let g = parse_group_spec("cyc:1").unwrap().build(&b).unwrap();
        assert_eq!(g.order(), 1);
        let s3 = parse_group_spec("sym:3").unwrap().build(&b).unwrap();
        assert!(!isotopy_core::group::is_dedekind(&s3, &b).unwrap());
        let q8 = parse_group_spec("quat:8").unwrap().build(&b).unwrap();
        assert_eq!(q8.label(), "Q8");
        assert_eq!(
            parse_group_spec("dihedral:4").unwrap(),
            GroupSpec::Builtin {
                family: Family::Dihedral,
                param: 4
            }
        );
    }

    #[test]
    fn files() {
        assert_eq!(
            parse_group_spec("@tables/s3.cayley").unwrap(),
            GroupSpec::File("tables/s3.cayley".into())
        );
        assert_eq!(parse_group_spec("@").unwrap_err().position, 1);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_group_spec("sym3").unwrap_err().position, 4);
        assert_eq!(parse_group_spec("foo:3").unwrap_err().position, 0);
        assert_eq!(parse_group_spec("sym:x").unwrap_err().position, 4);
        assert_eq!(parse_group_spec("sym:6").unwrap_err().position, 4);
        assert_eq!(parse_group_spec("quat:4").unwrap_err().position, 5);
        assert!(parse_group_spec("cyc:0").is_err());
        assert!(parse_group_spec("cyc:65").is_err());
        assert!(parse_group_spec("dih:13").is_err());
        assert!(parse_group_spec("alt:5").is_ok());
    }
}
