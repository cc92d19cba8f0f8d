"""
String-backed enumeration module.

Every string-valued option of the package (boundary modes, perturbation kinds, spectrum labels,
output formats, ...) is an enumeration whose members carry their serialized string as value.
The enumerations can be initialized from strings found in configuration files or on the
command line.

Classes:
    - ChoiceEnum: Base enumeration with a strict `from_string` constructor.
"""

from enum import Enum


class ChoiceEnum(str, Enum):
    """
    Base enumeration of string options.

    Members compare equal to their string values, so they serialize to JSON unchanged and
    pydantic accepts either a member or its value.

    Methods:
        from_string(cls, value: str) -> ChoiceEnum:
            Class method to convert a string to an enumeration member.
    """

    @classmethod
    def from_string(cls, value: str) -> "ChoiceEnum":
        """
        Converts a string representation to the corresponding member.

        Args:
            value (str): The string representation (e.g., "periodic").

        Returns:
            ChoiceEnum: The corresponding member.

        Raises:
            ValueError: If the string does not match any member value.
        """
        for member in cls:
            if member.value == value:
                return member
        raise ValueError(
            f"Unknown {cls.__name__} value: {value}. "
            f"Supported values are: {[m.value for m in cls]}"
        )

    def __str__(self) -> str:
        return str(self.value)
