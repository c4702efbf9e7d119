"""
인스턴스 생성기 베이스 클래스
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from models import Instance, RectilinearNetwork


@dataclass(frozen=True)
class GeneratedInstance:
    instance: Instance
    certificate: Optional[RectilinearNetwork] = None   # 알려진 feasible 네트워크 (tight 계열)
    normalized_length: Optional[Fraction] = None       # 인증서 길이 / 최상위 정사각형 대각선 거리


class BaseGenerator(ABC):
    """인스턴스 생성기 추상 베이스 클래스"""

    @property
    @abstractmethod
    def family_name(self) -> str:
        """계열 이름 (tight, random, mmn)"""
        pass

    @abstractmethod
    def generate(self) -> GeneratedInstance:
        """파라미터가 같으면 항상 같은 인스턴스"""
        pass
