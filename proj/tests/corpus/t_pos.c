typedef unsigned char flag;
typedef double asn1Real;
typedef int My2ndInt;

typedef struct {
  int nCount;
  char arr[10];
} T_POS_label;

typedef struct {
  int nCount;
  int arr[4];
} T_ARR;

typedef struct {
  int a;
  int b;
} T_SET;

typedef struct {
  int nCount;
  T_SET arr[3];
} T_SETOF;

typedef struct {
  int nCount;
  int arr[2011];
} T_POS_subTypeArray;

typedef enum { T_POS_NONE,           longitude_PRESENT,
               latitude_PRESENT,     height_PRESENT,
               subTypeArray_PRESENT, label_PRESENT,
               intArray_PRESENT,     myIntSet_PRESENT,
               myIntSetOf_PRESENT,   anInt_PRESENT
} T_POS_selection;

typedef struct {
    T_POS_selection kind;
    union { asn1Real longitude; asn1Real latitude;
            asn1Real height;    My2ndInt anInt;
            T_POS_label label;  T_ARR intArray;
            T_SET myIntSet;     T_SETOF myIntSetOf;
            T_POS_subTypeArray subTypeArray;
    } u;
} T_POS;

#define ERR_T_POS_KIND 1
#define ERR_T_POS_ANINT 2
#define ERR_T_POS_COUNT 3

flag T_POS_IsConstraintValid(const T_POS *pVal, int *pErrCode) {
  switch (pVal->kind) {
    case anInt_PRESENT:
      if (pVal->u.anInt < -100 || pVal->u.anInt > 100) {
        *pErrCode = 2;
        return 0;
      }
      break;
    case intArray_PRESENT:
      if (pVal->u.intArray.nCount < 0 || pVal->u.intArray.nCount > 4) {
        *pErrCode = 3;
        return 0;
      }
      break;
    case subTypeArray_PRESENT:
      if (pVal->u.subTypeArray.nCount > 2011) {
        *pErrCode = 3;
        return 0;
      }
      break;
    case T_POS_NONE:
      *pErrCode = 1;
      return 0;
    default:
      if (pVal->kind > anInt_PRESENT) {
        *pErrCode = 1;
        return 0;
      }
      break;
  }
  *pErrCode = 0;
  return 1;
}
