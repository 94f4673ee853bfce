"""
JSON schemas for everything the CLI prints with --json.

Domain objects build their payload with to_dict(); the models here validate
it and render it with sorted keys so identical inputs give identical bytes.
"""

import json
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ValidationError

from src.error_handling.exceptions import InvalidInputException


class ElementModel(BaseModel):
    ground: List[str]
    members: List[str]


class IdealModel(BaseModel):
    generators: List[ElementModel]
    principal: ElementModel


class MaxIdealModel(BaseModel):
    point: str
    principal: ElementModel


class DecompositionModel(BaseModel):
    target: IdealModel
    factors: List[MaxIdealModel]
    reduced: bool
    verified: bool


class QuotientModel(BaseModel):
    modulus: ElementModel
    target: List[str]


class FinCofModel(BaseModel):
    kind: Literal["finite", "cofinite"]
    support: List[int]


class SpanModel(BaseModel):
    line: int
    column: int
    end_column: Optional[int] = None


class ReportModel(BaseModel):
    """One evaluated statement."""

    statement: str
    ok: bool = True
    text: str
    data: Optional[Dict[str, Any]] = None
    span: Optional[SpanModel] = None
    error: Optional[Dict[str, Any]] = None


PAYLOAD_MODELS = {
    "element": ElementModel,
    "ideal": IdealModel,
    "decomposition": DecompositionModel,
    "quotient": QuotientModel,
    "fincof": FinCofModel,
}


def validate_payload(kind: str, payload: Dict[str, Any]) -> Dict[str, Any]:
    """Check a to_dict() payload against its model and return the normalised dict."""
    model = PAYLOAD_MODELS[kind]
    try:
        return model.model_validate(payload).model_dump(mode="json")
    except ValidationError as e:
        raise InvalidInputException(f"{kind} payload does not match its schema: {e}", field=kind) from e


def dumps(model: BaseModel) -> str:
    """Stable JSON text for a model."""
    return json.dumps(model.model_dump(mode="json", exclude_none=True), sort_keys=True, ensure_ascii=False)


def decomposition_schema() -> Dict[str, Any]:
    return DecompositionModel.model_json_schema()
