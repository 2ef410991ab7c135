"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class QuivlocError(Exception):
    exit_code = 1


class InputError(QuivlocError, ValueError):
    """Malformed or inconsistent input (bad vector length, unknown preset...)."""

    exit_code = 1


class UnsupportedQuiverError(QuivlocError):
    """The quiver is neither finite ADE, untwisted affine ADE, nor Jordan."""

    exit_code = 2


class NonGenericStabilityError(QuivlocError):
    """The stability parameter lies on a GIT wall."""

    exit_code = 3

    def __init__(self, root, theta):
        self.root = tuple(root)
        self.theta = tuple(theta)
        super().__init__(
            f"stability parameter on a wall: theta={_fmt(self.theta)} "
            f"pairs to zero with root {list(self.root)}"
        )


class BudgetExceededError(QuivlocError):
    exit_code = 4

    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"instance too large: enumeration budget of {budget} nodes exceeded")


class NotFlatError(InputError):
    """Raised by wall/oracle operations on instances where the moment map is not flat."""

    def __init__(self, v, w):
        super().__init__(
            f"moment map is not flat for v={list(v)}, w={list(w)}; run is_flat for a witness"
        )


class InternalConsistencyError(QuivlocError, AssertionError):
    """A computed quantity violated an invariant that holds on valid input."""

    exit_code = 1


def _fmt(vec):
    return "(" + ", ".join(str(x) for x in vec) + ")"
