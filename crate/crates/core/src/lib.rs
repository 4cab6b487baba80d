//! Abstract argumentation frameworks, their semantics, and the
//! translations that map one semantics onto another.
//!
//! ```
//! use argtrans::{translations, Af, SemanticsId, TranslationId};
//!
//! let f = Af::from_names(&["a", "b"], &[("a", "b"), ("b", "a")]);
//! let out = translations::translate(&f, TranslationId::Tr1).unwrap();
//! let prf = argtrans::semantics::extensions(&f, SemanticsId::Prf);
//! let sem = argtrans::semantics::extensions(&out.target, SemanticsId::Sem);
//! assert_eq!(prf, sem);
//! ```

pub mod af;
pub mod error;
pub mod format;
pub mod generate;
pub mod par;
pub mod properties;
pub mod reductions;
pub mod semantics;
pub mod translations;

pub use af::{Af, ArgKind, ArgumentId, Extension};
pub use error::{Error, Result};
pub use semantics::{ExtensionSet, SemanticsId};
pub use translations::{Route, TranslationId, TranslationOutput};
