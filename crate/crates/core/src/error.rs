use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an argumentation framework needs at least one argument")]
    EmptyArguments,

    #[error("attack ({0}, {1}) has an endpoint that is not an argument")]
    DanglingAttack(String, String),

    #[error("argument `{0}` is not part of the framework")]
    NotInFramework(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },

    /// `line` is `None` when the name was found in an already built
    /// framework handed to a translation.
    #[error("`{name}` uses the reserved decorated-name encoding{}", at_line(*.line))]
    ReservedName { line: Option<usize>, name: String },

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("instance too large: {0}")]
    TooLarge(String),
}

fn at_line(line: Option<usize>) -> String {
    line.map(|l| format!(" (line {l})")).unwrap_or_default()
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
