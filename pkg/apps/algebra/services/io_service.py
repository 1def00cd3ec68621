import hashlib
import json
import logging

import numpy as np

from apps.algebra.models import Algebra, Element
from apps.algebra.serializers import AlgebraSerializer, ElementField, TupleField
from apps.algebra.services.algebra_service import AlgebraService
from apps.algebra.services.gallery_service import GalleryService
from apps.core.exceptions import AlgebraMismatch, DimensionMismatch, ParseError
from apps.core.services.input_service import GALLERY_PREFIX, InputService

logger = logging.getLogger(__name__)


class AlgebraIOService:
    # ---------------
    # --- Algebra ---
    # ---------------

    @classmethod
    def parse_algebra(cls, text: str) -> Algebra:
        """
        Parse an algebra from JSON text or a gallery reference and validate its axioms.

        Args:
            text (str): algebra JSON, `gallery:<name>`, or a bare gallery name.

        Returns:
            Algebra: a validated algebra. JSON inputs get the id `json:<hash>`.

        Raises:
            ParseError: malformed JSON or schema.
            UnknownGallery: unknown gallery reference.
            DimensionMismatch / AxiomViolation: forwarded from validation.

        """
        stripped = text.strip()
        if stripped.startswith(GALLERY_PREFIX):
            return GalleryService.gallery(stripped[len(GALLERY_PREFIX):])
        if stripped in GalleryService.names():
            return GalleryService.gallery(stripped)

        data = InputService.loads(text)
        if not isinstance(data, dict):
            raise ParseError("Algebra JSON must be an object.", line=1)

        attrs = InputService.validate(AlgebraSerializer(data=data))
        dim = len(attrs["basis_names"])
        if attrs["dim"] != dim:
            raise DimensionMismatch(f"'dim' is {attrs['dim']} but {dim} basis names are given.")

        structure = np.zeros((dim, dim, dim), dtype=complex)
        for i, j, k, value in attrs["structure"]:
            structure[i, j, k] = value

        algebra = Algebra(
            algebra_id=cls.content_id(data),
            basis_names=tuple(attrs["basis_names"]),
            structure=structure,
            unit=np.array(attrs["unit"], dtype=complex),
        )
        AlgebraService.validate_algebra(algebra)
        logger.debug("Parsed algebra %s of dimension %d", algebra.algebra_id, dim)
        return algebra

    @staticmethod
    def content_id(data: dict) -> str:
        digest = hashlib.sha256(json.dumps(data, sort_keys=True).encode("utf-8"))
        return "json:" + digest.hexdigest()[:12]

    @staticmethod
    def serialize_algebra(algebra: Algebra) -> str:
        return json.dumps(AlgebraSerializer(algebra).data, sort_keys=True)

    # ----------------
    # --- Elements ---
    # ----------------

    @classmethod
    def parse_element(cls, text_or_data, algebra: Algebra) -> Element:
        data = InputService.loads(text_or_data) if isinstance(text_or_data, str) else text_or_data
        if isinstance(data, dict):
            data = cls.__unwrap(data, "coeffs", algebra)
        return cls.__element(InputService.validate_field(ElementField(), data), algebra)

    @classmethod
    def parse_tuple(cls, text_or_data, algebra: Algebra) -> list[Element]:
        data = InputService.loads(text_or_data) if isinstance(text_or_data, str) else text_or_data
        if isinstance(data, dict):
            data = cls.__unwrap(data, "elements", algebra)
        return [cls.__element(coeffs, algebra) for coeffs in InputService.validate_field(TupleField(), data)]

    @staticmethod
    def __unwrap(data: dict, key: str, algebra: Algebra):
        # {"algebra": "<id>", "<key>": [...]} is accepted next to the bare list
        tag = data.get("algebra")
        if tag in GalleryService.names() and tag != algebra.algebra_id:
            raise AlgebraMismatch(f"Input names algebra '{tag}', got '{algebra.algebra_id}'.")
        if key not in data:
            raise ParseError(f"Missing '{key}'.")
        return data[key]

    @staticmethod
    def __element(coeffs: list, algebra: Algebra) -> Element:
        if len(coeffs) != algebra.dim:
            raise DimensionMismatch(
                f"Element has {len(coeffs)} coefficients, algebra '{algebra.algebra_id}' "
                f"has dimension {algebra.dim}."
            )
        return algebra.element(coeffs)

    @staticmethod
    def serialize_element(element: Element) -> list:
        return ElementField().to_representation(element.coeffs)
