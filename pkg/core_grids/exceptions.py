__all__ = [
    'InvalidArgumentException', 'GridMismatchException'
]


class InvalidArgumentException(Exception):
    """
    This exception will be raised if an operation receives an argument outside its domain, for example a non-positive
    grid step or an empty signal
    """
    def __init__(self, message=None):
        self.value = 'Invalid argument passed to a ridgenet operation'
        if message:
            self.value = message

    def __str__(self):
        return repr(self.value)


class GridMismatchException(InvalidArgumentException):
    """
    This exception will be raised if two sampled fields that must share a grid do not
    """
    def __init__(self, message=None):
        super(GridMismatchException, self).__init__(message=message or 'Sampling grids of the operands do not match')
