from fastapi import APIRouter, HTTPException

from quasisection_euler.engine.classify import classify
from quasisection_euler.engine.oracle import oracle_report
from quasisection_euler.engine.weights import weight_of
from quasisection_euler.schemas.common import DescriptorModel
from quasisection_euler.schemas.portrait import ClassifyRead, PortraitModel

router = APIRouter(prefix="/portraits", tags=["portraits"])


@router.post("/classify", response_model=ClassifyRead)
async def classify_portrait(portrait_in: PortraitModel):
    """
    Классифицирует портрет и считает ожидаемый индекс полным перебором.
    """
    try:
        portrait = portrait_in.to_domain()
        descriptor = classify(portrait)
        report = oracle_report(portrait)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return ClassifyRead(
        descriptor=DescriptorModel.from_descriptor(descriptor),
        weight=weight_of(descriptor),
        expected_index=report.expected_index,
        shortcut=report.shortcut,
        assignments=report.assignments,
        configurations=report.configurations,
        match=report.match,
    )
