"""rules choosing the number of blocks k from the sample size"""

from fractions import Fraction


from ..errors import InvalidArgument


K_RULES = {
    'n^1/3': Fraction(1, 3),
    'n^1/2': Fraction(1, 2),
    'n^2/3': Fraction(2, 3),
}
"""rule name -> exponent l in k = round(n^l)"""


def power_rule(exponent):
    """construct the rule k = round(n^exponent)

    Parameters
    ----------
    exponent: float
        power of n, in (0, 1)

    Returns
    -------
    Callable
        function taking a sample size n and returning k, at least 1

    Example
    -------
        rule = power_rule(1/3)
        rule(1000)  # 10
    """
    exponent = float(exponent)
    if not 0 < exponent < 1:
        raise InvalidArgument(f'k rule exponent must be in (0, 1), got {exponent}')

    def _rule_impl(n):
        return max(1, int(round(n**exponent)))
    return _rule_impl


def rule_name(rule):
    """name of a k rule given its name or its exponent (1/3, 0.5, ...)"""
    if isinstance(rule, str):
        if rule not in K_RULES:
            raise InvalidArgument(f'{rule} is not one of the k rules ({list(K_RULES)})')
        return rule
    for name, exponent in K_RULES.items():
        if abs(float(rule) - float(exponent)) < 1e-9:
            return name
    raise InvalidArgument(f'no k rule with exponent {rule}, options are {list(K_RULES)}')


def k_for(rule, n):
    """k chosen by the named rule at sample size n"""
    return power_rule(K_RULES[rule_name(rule)])(n)
