"""
정확한 유리수 입출력
파일에는 "num/den" 토큰, 요약 출력에는 12자리 근사 십진수
"""

from decimal import Decimal, localcontext
from fractions import Fraction

from errors import FormatError


def parse_rational(token: str) -> Fraction:
    """"3", "-7/4" 같은 토큰 파싱"""
    try:
        if "." in token or "e" in token.lower():
            raise ValueError("십진 표기는 허용하지 않음")
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError(f"유리수 토큰 파싱 실패 '{token}': {e}") from e


def format_rational(value: Fraction) -> str:
    """정수면 "3", 아니면 "num/den" """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def approx_decimal(value: Fraction, digits: int = 12) -> str:
    """유효숫자 digits 자리 근사값 (표시용)"""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        result = Decimal(value.numerator) / Decimal(value.denominator)
    return format(result, "f")
