"""
공통 예외 정의
라이브러리 코드는 예외를 던지고, main.py만 잡아서 종료 코드로 변환
"""


class GmmnError(Exception):
    """모든 도메인 예외의 베이스"""
    exit_code = 1


class DimensionMismatchError(GmmnError, ValueError):
    """차원이 서로 다른 점/인스턴스를 섞은 경우"""
    exit_code = 2


class FormatError(GmmnError, ValueError):
    """인스턴스/네트워크 파일 파싱 실패"""
    exit_code = 2


class ConfigError(GmmnError, ValueError):
    """잘못된 설정값 (알고리즘 조합, 생성기 파라미터 등)"""
    exit_code = 3


class PreconditionError(GmmnError, ValueError):
    """연산의 사전 조건 위반 (분리 조건, 빈 인스턴스 등)"""
    exit_code = 3


class SizeCapError(GmmnError, ValueError):
    """정확해(oracle) 계산기의 크기 제한 초과"""
    exit_code = 3


class InfeasibleOutputError(GmmnError, RuntimeError):
    """알고리즘 출력이 검증기를 통과하지 못함 (버그 신호)"""
    exit_code = 4

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class BoundViolationError(GmmnError, AssertionError):
    """증명된 상한(길이/깊이)을 어긴 출력 (버그 신호)"""
    exit_code = 4
