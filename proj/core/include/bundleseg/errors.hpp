#ifndef BUNDLESEG_ERRORS_HPP
#define BUNDLESEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bundleseg {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// geometry / domain types
struct InvalidStreamline : Error { using Error::Error; };
struct InvalidBundle : Error { using Error::Error; };
struct EmptyTractogram : Error { using Error::Error; };
struct VoxelOutOfMask : Error { using Error::Error; };
struct EmptyRoi : Error { using Error::Error; };

// assignment solvers
struct EmptyMatrix : Error { using Error::Error; };
struct NonFiniteCost : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct TooLargeForOracle : Error { using Error::Error; };

// segmentation
struct InvalidConfig : Error { using Error::Error; };

// evaluation
struct GridMismatch : Error { using Error::Error; };
struct BothEmpty : Error { using Error::Error; };

// synthetic data
struct InvalidSpec : Error { using Error::Error; };

// file formats
struct FileError : Error { using Error::Error; };
struct BadMagic : Error { using Error::Error; };
struct BadVersion : Error { using Error::Error; };
struct TruncatedFile : Error { using Error::Error; };
struct CorruptCount : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct VoxelOutOfShape : Error { using Error::Error; };
struct DuplicateId : Error { using Error::Error; };

}  // namespace bundleseg

#endif
