__all__ = [
    'NetworkFormatException'
]


class NetworkFormatException(Exception):
    """
    This exception will be raised if a network file does not follow the ridgenet-v1 text format
    """
    def __init__(self, message=None):
        self.value = 'Network file is not in ridgenet-v1 format'
        if message:
            self.value = message

    def __str__(self):
        return repr(self.value)
