//! Plain-text expressions in `t` and `r`, evaluated as second-order jets.

mod ast;
mod eval;
mod jet;
mod parser;

pub use ast::{BinOp, Expr, ExprKind, Func, Span, Var};
pub use eval::{DomainReason, EvalError};
pub use jet::{Jet, Jet2, Jet4};
pub use parser::{parse, parse_with, ParseError, Variables};
