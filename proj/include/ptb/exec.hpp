#pragma once

namespace ptb {

// Every parallel kernel has a serial reference path selected by this flag.
enum class Exec { serial, openmp };

}  // namespace ptb
