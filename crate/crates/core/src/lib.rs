pub mod characters;
pub mod error;
pub mod partition;
pub mod scalar;
pub mod series;
pub mod symfunc;
pub mod perm;
pub mod center;
pub mod group_algebra;
pub mod walks;
pub mod twist;
pub mod convolution;
pub mod tau;
pub mod determinant;
pub mod oracle;
pub mod verify;
pub mod cli;
