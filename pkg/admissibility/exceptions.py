__all__ = [
    'IndeterminateAdmissibilityException', 'ConstructionFailedException', 'NonAdmissiblePairException'
]


class IndeterminateAdmissibilityException(Exception):
    """
    This exception will be raised if the partial integrals of K neither settle nor grow cleanly as the inner cutoff
    shrinks. The cutoff trace is attached for inspection.
    """
    def __init__(self, message=None, trace=None):
        self.value = 'Admissibility integral neither converged nor diverged over the cutoff sequence'
        if message:
            self.value = message
        self.trace = trace or []

    def __str__(self):
        return repr(self.value)


class ConstructionFailedException(Exception):
    """
    This exception will be raised if no ridgelet Lambda^m G^(k) with k up to the search limit is admissible for an
    activation. The reports of every order tried are attached.
    """
    def __init__(self, message=None, reports=None):
        self.value = 'No admissible ridgelet found for the activation'
        if message:
            self.value = message
        self.reports = reports or []

    def __str__(self):
        return repr(self.value)


class NonAdmissiblePairException(Exception):
    """
    This exception will be raised if a reconstruction is requested with a vanishing normalization constant K
    """
    def __init__(self, message=None):
        self.value = 'K = 0: the (ridgelet, activation) pair is not admissible'
        if message:
            self.value = message

    def __str__(self):
        return repr(self.value)
