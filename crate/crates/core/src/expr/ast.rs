use std::fmt;

/// Byte range of a node in the source text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    R,
    Theta,
    Phi,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::R => "r",
            Var::Theta => "theta",
            Var::Phi => "phi",
        }
    }

    /// Position of the variable in the `(t, r, theta, phi)` ordering.
    pub fn index(self) -> usize {
        match self {
            Var::T => 0,
            Var::R => 1,
            Var::Theta => 2,
            Var::Phi => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Sinh,
    Cosh,
    Tanh,
}

impl Func {
    pub const ALL: [Func; 9] = [
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Exp,
        Func::Log,
        Func::Sqrt,
        Func::Sinh,
        Func::Cosh,
        Func::Tanh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Tanh => "tanh",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Num(f64),
    Var(Var),
    Pi,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// Expression tree. Equality is structural and ignores source spans.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    /// A literal with an empty span, for trees built in code.
    pub fn num(v: f64) -> Self {
        Expr::new(ExprKind::Num(v), Span::default())
    }

    pub fn zero() -> Self {
        Expr::num(0.0)
    }

    pub fn var(v: Var) -> Self {
        Expr::new(ExprKind::Var(v), Span::default())
    }

    pub fn binary(op: BinOp, a: Expr, b: Expr) -> Self {
        Expr::new(ExprKind::Binary(op, Box::new(a), Box::new(b)), Span::default())
    }

    pub fn call(f: Func, a: Expr) -> Self {
        Expr::new(ExprKind::Call(f, Box::new(a)), Span::default())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Expr) -> Self {
        Expr::new(ExprKind::Neg(Box::new(a)), Span::default())
    }

    /// Whether `v` occurs anywhere in the tree.
    pub fn depends_on(&self, v: Var) -> bool {
        match &self.kind {
            ExprKind::Num(_) | ExprKind::Pi => false,
            ExprKind::Var(x) => *x == v,
            ExprKind::Neg(a) | ExprKind::Call(_, a) => a.depends_on(v),
            ExprKind::Binary(_, a, b) => a.depends_on(v) || b.depends_on(v),
        }
    }

    /// The value of an exponent that is a literal integer, possibly negated.
    pub(crate) fn literal_integer(&self) -> Option<i32> {
        let v = match &self.kind {
            ExprKind::Num(v) => *v,
            ExprKind::Neg(inner) => match inner.kind {
                ExprKind::Num(v) => -v,
                _ => return None,
            },
            _ => return None,
        };
        (v.fract() == 0.0 && v.abs() <= f64::from(i32::MAX)).then_some(v as i32)
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Binary(BinOp::Add | BinOp::Sub, ..) => 1,
            ExprKind::Binary(BinOp::Mul | BinOp::Div, ..) => 2,
            ExprKind::Neg(_) => 3,
            ExprKind::Binary(BinOp::Pow, ..) => 4,
            _ => 5,
        }
    }

    fn write_min(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.write_bare(f)?;
            write!(f, ")")
        } else {
            self.write_bare(f)
        }
    }

    fn write_bare(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Num(v) => write!(f, "{v}"),
            ExprKind::Var(v) => f.write_str(v.name()),
            ExprKind::Pi => f.write_str("pi"),
            ExprKind::Neg(a) => {
                write!(f, "-")?;
                a.write_min(f, 3)
            }
            ExprKind::Call(func, a) => {
                write!(f, "{}(", func.name())?;
                a.write_min(f, 0)?;
                write!(f, ")")
            }
            ExprKind::Binary(BinOp::Pow, a, b) => {
                a.write_min(f, 5)?;
                write!(f, "^")?;
                // the exponent grammar accepts a leading minus directly
                if matches!(b.kind, ExprKind::Neg(_)) {
                    b.write_bare(f)
                } else {
                    b.write_min(f, 4)
                }
            }
            ExprKind::Binary(op, a, b) => {
                let p = self.precedence();
                a.write_min(f, p)?;
                write!(f, " {} ", op.symbol())?;
                b.write_min(f, p + 1)
            }
        }
    }
}

/// Serializes with the minimal parentheses needed to re-parse to an equal
/// tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_min(f, 0)
    }
}
